/* tslint:disable */
/* eslint-disable */

/**
 * Deflection grid shared by the torque plot (rad).
 */
export function deflection_grid(): Float64Array;

/**
 * Roller positions of the torque family (m).
 */
export function family_grid(): Float64Array;

/**
 * Pairs `(x_r, k(0, x_r))` over the roller travel, flattened.
 */
export function stiffness_curve(leaves: number, thickness_mm: number): Float64Array;

/**
 * Soft-to-stiff sweep held at deflection `q_d`.
 *
 * Returns `[W_m2_abs, W_m2, ΔU, bound, n, t…, x_r…, W_m2_abs(t)…]` where
 * `n` is the number of samples and `bound` the friction+inertia work of
 * an unloaded sweep.
 */
export function sweep_energy(q_d: number): Float64Array;

/**
 * `τ_s` for every roller position in [`family_grid`], each over
 * [`deflection_grid`], concatenated. With `elastica` set, the contact force
 * comes from the large-deflection solver.
 */
export function torque_family(leaves: number, thickness_mm: number, elastica: boolean): Float64Array;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly deflection_grid: () => [number, number];
    readonly family_grid: () => [number, number];
    readonly stiffness_curve: (a: number, b: number) => [number, number, number, number];
    readonly sweep_energy: (a: number) => [number, number, number, number];
    readonly torque_family: (a: number, b: number, c: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __externref_table_dealloc: (a: number) => void;
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
