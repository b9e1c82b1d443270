/* tslint:disable */
/* eslint-disable */

/**
 * Real and imaginary parts of ₛY_ℓm on the equiangular grid for band-limit
 * L, as `[re…, im…]`, each L × (2L−1) and θ-major.
 */
export function harmonic_map(band_limit: number, ell: number, m: number, spin: number): Float64Array;

/**
 * Maximum absolute coefficient error after inverse then forward transforms
 * of random coefficients with parts uniform on [−1, 1].
 */
export function round_trip_error(band_limit: number, spin: number, seed: number): number;

/**
 * `[θ…, v…, q…]`: the 2L−1 extended colatitudes, the ring weights v on them
 * and the L quadrature weights q.
 */
export function weight_profile(band_limit: number, spin: number): Float64Array;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly harmonic_map: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly round_trip_error: (a: number, b: number, c: number) => [number, number, number];
    readonly weight_profile: (a: number, b: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
