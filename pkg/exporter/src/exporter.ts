import * as fs from "node:fs";
import * as path from "node:path";

import { resolveModel } from "./embedder.js";
import { collectLabels } from "./labels.js";
import { serializeEmbeddingFile } from "./writer.js";

export interface ExportManifest {
  model_name: string;
  dimension: number;
  label_count: number;
  output: string;
}

/**
 * Reads all inputs, embeds the unique normalized labels with the named
 * model, and writes the embedding file.  Returns the manifest.
 */
export function exportEmbeddings(
  inputs: string[],
  modelName: string,
  out: string,
  dimension?: number,
): ExportManifest {
  if (inputs.length === 0) {
    throw new Error("at least one input file is required");
  }
  const model = resolveModel(modelName, dimension);
  const labels = collectLabels(inputs);
  const embeddings: Record<string, number[]> = {};
  for (const label of labels) {
    embeddings[label] = model.embed(label);
  }
  const directory = path.dirname(out);
  if (directory && !fs.existsSync(directory)) {
    fs.mkdirSync(directory, { recursive: true });
  }
  fs.writeFileSync(out, serializeEmbeddingFile({ dimension: model.dimension, embeddings }));
  return {
    model_name: model.name,
    dimension: model.dimension,
    label_count: labels.length,
    output: out,
  };
}
