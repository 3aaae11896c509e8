/**
 * Label collection from exporter inputs.
 *
 * Two input kinds are supported: ADTool XML attack trees (every <label>
 * element's text) and plain text files with one label per line.  Labels
 * are normalized exactly like the consuming similarity provider: trimmed
 * and lowercased, so lookups never miss on case or padding.
 */

import * as fs from "node:fs";
import * as path from "node:path";

const LABEL_RE = /<label(?:\s[^>]*)?>([\s\S]*?)<\/label>/g;

const ENTITIES: Record<string, string> = {
  "&amp;": "&",
  "&lt;": "<",
  "&gt;": ">",
  "&quot;": '"',
  "&apos;": "'",
};

function unescapeXml(text: string): string {
  return text
    .replace(/&#x([0-9a-fA-F]+);/g, (_, hex) => String.fromCodePoint(parseInt(hex, 16)))
    .replace(/&#([0-9]+);/g, (_, dec) => String.fromCodePoint(parseInt(dec, 10)))
    .replace(/&(amp|lt|gt|quot|apos);/g, (entity) => ENTITIES[entity]);
}

export function normalizeLabel(label: string): string {
  return label.trim().toLowerCase();
}

export function labelsFromXml(document: string): string[] {
  const labels: string[] = [];
  for (const match of document.matchAll(LABEL_RE)) {
    const label = normalizeLabel(unescapeXml(match[1]));
    if (label.length > 0) {
      labels.push(label);
    }
  }
  return labels;
}

export function labelsFromLines(text: string): string[] {
  return text
    .split(/\r?\n/)
    .map(normalizeLabel)
    .filter((label) => label.length > 0);
}

/** Reads every input file and returns the sorted set of unique labels. */
export function collectLabels(inputs: string[]): string[] {
  const unique = new Set<string>();
  for (const input of inputs) {
    const text = fs.readFileSync(input, "utf-8");
    const isXml = path.extname(input).toLowerCase() === ".xml" || text.trimStart().startsWith("<");
    const labels = isXml ? labelsFromXml(text) : labelsFromLines(text);
    if (labels.length === 0) {
      throw new Error(`no labels found in ${input}`);
    }
    for (const label of labels) {
      unique.add(label);
    }
  }
  return [...unique].sort();
}
