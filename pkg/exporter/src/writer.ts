/**
 * Embedding-file serialization.
 *
 * Output format (consumed by the atdist similarity provider):
 *   {"dimension": d, "embeddings": {"<label>": [f1, ..., fd], ...}}
 *
 * Labels are written in sorted order and floats with 9 significant
 * digits so re-exports of the same inputs are byte-identical.
 */

export interface EmbeddingFile {
  dimension: number;
  embeddings: Record<string, number[]>;
}

function formatFloat(value: number): string {
  if (Object.is(value, -0)) {
    value = 0;
  }
  const fixed = Number(value.toPrecision(9));
  return String(fixed);
}

export function serializeEmbeddingFile(file: EmbeddingFile): string {
  const labels = Object.keys(file.embeddings).sort();
  const lines: string[] = [];
  lines.push("{");
  lines.push(`  "dimension": ${file.dimension},`);
  lines.push('  "embeddings": {');
  labels.forEach((label, index) => {
    const vector = file.embeddings[label].map(formatFloat).join(", ");
    const comma = index < labels.length - 1 ? "," : "";
    lines.push(`    ${JSON.stringify(label)}: [${vector}]${comma}`);
  });
  lines.push("  }");
  lines.push("}");
  return lines.join("\n") + "\n";
}
