/* tslint:disable */
/* eslint-disable */

/**
 * Surviving terms per `Q_i` and the order of `q·f` at `λ₀` for each recipe.
 */
export function residue(m: number, n: number): string;

/**
 * Tables `T ∈ 𝒯^α_{a,b}` with `σ_T` and the induced parabolic of `H`.
 */
export function tables(group: string, a: number, b: number, alpha: string): string;

/**
 * Coweight pairings of `η[Q,w;μ₀]` for every proper `Q` and `w ∈ ₗW_M′`.
 */
export function zero_exponents(m: number, n: number): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly residue: (a: number, b: number) => [number, number];
    readonly tables: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number];
    readonly zero_exponents: (a: number, b: number) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
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
