/**
 * Embedding backends.
 *
 * The exporter is model agnostic: anything that maps a label to a
 * fixed-dimension vector fits the interface.  The built-in default is a
 * deterministic hashed character-trigram featurizer - it needs no
 * downloads, produces identical files on every run, and is sufficient
 * for the file-format contract the downstream tool consumes.  A real
 * sentence-embedding service can be swapped in through the same
 * interface.
 */

export interface EmbeddingModel {
  readonly name: string;
  readonly dimension: number;
  embed(label: string): number[];
}

/** FNV-1a 32-bit hash; stable across platforms. */
function fnv1a(text: string): number {
  let hash = 0x811c9dc5;
  for (let i = 0; i < text.length; i++) {
    hash ^= text.charCodeAt(i);
    hash = Math.imul(hash, 0x01000193) >>> 0;
  }
  return hash >>> 0;
}

export class HashedNgramModel implements EmbeddingModel {
  readonly name: string;
  readonly dimension: number;
  private readonly ngram: number;

  constructor(dimension = 256, ngram = 3) {
    if (dimension <= 0) {
      throw new Error(`dimension must be positive, got ${dimension}`);
    }
    this.dimension = dimension;
    this.ngram = ngram;
    this.name = `hash-ngram-v1-d${dimension}`;
  }

  embed(label: string): number[] {
    const padded = `${label}`;
    const vector = new Array<number>(this.dimension).fill(0);
    for (let i = 0; i <= padded.length - this.ngram; i++) {
      const hash = fnv1a(padded.slice(i, i + this.ngram));
      const sign = (hash & 1) === 0 ? 1 : -1;
      vector[(hash >>> 1) % this.dimension] += sign;
    }
    const norm = Math.sqrt(vector.reduce((acc, v) => acc + v * v, 0));
    if (norm === 0) {
      throw new Error(`embedding for label ${JSON.stringify(label)} is the zero vector`);
    }
    return vector.map((v) => v / norm);
  }
}

export function resolveModel(name: string, dimension?: number): EmbeddingModel {
  if (name === "hash-ngram-v1" || name.startsWith("hash-ngram-v1-d")) {
    const suffix = name.match(/-d(\d+)$/);
    const dim = dimension ?? (suffix ? parseInt(suffix[1], 10) : undefined);
    return new HashedNgramModel(dim ?? 256);
  }
  throw new Error(
    `unknown model ${JSON.stringify(name)}; built-in models: hash-ngram-v1[-d<dim>]`,
  );
}
