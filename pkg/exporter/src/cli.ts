#!/usr/bin/env node
/**
 * export-embeddings --model NAME --out FILE [--dimension N] INPUT...
 *
 * Inputs are ADTool XML attack trees or plain label lists (one label per
 * line).  Writes the embedding JSON consumed by the atdist similarity
 * provider and prints the export manifest to stdout.
 */

import { exportEmbeddings } from "./exporter.js";

const USAGE =
  "Usage: export-embeddings --model NAME --out FILE [--dimension N] INPUT...\n" +
  "  built-in models: hash-ngram-v1 (deterministic, offline; default dimension 256)";

interface CliArgs {
  model: string;
  out: string;
  dimension?: number;
  inputs: string[];
}

export function parseArgs(argv: string[]): CliArgs {
  let model = "hash-ngram-v1";
  let out: string | undefined;
  let dimension: number | undefined;
  const inputs: string[] = [];
  for (let i = 0; i < argv.length; i++) {
    const arg = argv[i];
    if (arg === "--model") {
      model = argv[++i];
    } else if (arg === "--out") {
      out = argv[++i];
    } else if (arg === "--dimension") {
      dimension = parseInt(argv[++i], 10);
      if (!Number.isInteger(dimension) || dimension <= 0) {
        throw new Error(`--dimension needs a positive integer, got ${argv[i]}`);
      }
    } else if (arg === "--help" || arg === "-h") {
      throw new Error(USAGE);
    } else if (arg.startsWith("--")) {
      throw new Error(`unknown option ${arg}\n${USAGE}`);
    } else {
      inputs.push(arg);
    }
  }
  if (!out) {
    throw new Error(`--out is required\n${USAGE}`);
  }
  if (inputs.length === 0) {
    throw new Error(`no input files given\n${USAGE}`);
  }
  return { model, out, dimension, inputs };
}

export function main(argv: string[]): number {
  let args: CliArgs;
  try {
    args = parseArgs(argv);
  } catch (error) {
    console.error((error as Error).message);
    return 2;
  }
  try {
    const manifest = exportEmbeddings(args.inputs, args.model, args.out, args.dimension);
    console.log(JSON.stringify(manifest));
    return 0;
  } catch (error) {
    console.error(`export failed: ${(error as Error).message}`);
    return 1;
  }
}

if (import.meta.url === `file://${process.argv[1]}`) {
  process.exit(main(process.argv.slice(2)));
}
