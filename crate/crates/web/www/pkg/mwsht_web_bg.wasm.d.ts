/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const harmonic_map: (a: number, b: number, c: number, d: number) => [number, number, number, number];
export const round_trip_error: (a: number, b: number, c: number) => [number, number, number];
export const weight_profile: (a: number, b: number) => [number, number, number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_start: () => void;
