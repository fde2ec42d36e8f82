/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const deflection_grid: () => [number, number];
export const family_grid: () => [number, number];
export const stiffness_curve: (a: number, b: number) => [number, number, number, number];
export const sweep_energy: (a: number) => [number, number, number, number];
export const torque_family: (a: number, b: number, c: number) => [number, number, number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_start: () => void;
