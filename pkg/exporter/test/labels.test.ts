import * as fs from "node:fs";
import * as os from "node:os";
import * as path from "node:path";

import { afterEach, beforeEach, describe, expect, it } from "vitest";

import { collectLabels, labelsFromLines, labelsFromXml, normalizeLabel } from "../src/labels.js";

const TREE_XML = `<?xml version="1.0" encoding="UTF-8"?>
<adtree>
  <node refinement="disjunctive">
    <label>Open Safe</label>
    <node refinement="conjunctive">
      <label> Learn Combination </label>
      <node><label>find written combo</label></node>
      <node><label>get combo from owner &amp; staff</label></node>
    </node>
  </node>
</adtree>
`;

describe("label extraction", () => {
  it("normalizes by trimming and lowercasing", () => {
    expect(normalizeLabel("  Open Door ")).toBe("open door");
  });

  it("pulls every label element out of ADTool XML", () => {
    expect(labelsFromXml(TREE_XML)).toEqual([
      "open safe",
      "learn combination",
      "find written combo",
      "get combo from owner & staff",
    ]);
  });

  it("unescapes numeric entities", () => {
    expect(labelsFromXml("<adtree><node><label>a &#x26; b &#38; c</label></node></adtree>")).toEqual([
      "a & b & c",
    ]);
  });

  it("reads plain label lists, skipping blank lines", () => {
    expect(labelsFromLines("Open Door\n\n  crack SAFE  \n")).toEqual(["open door", "crack safe"]);
  });
});

describe("collectLabels", () => {
  let dir: string;

  beforeEach(() => {
    dir = fs.mkdtempSync(path.join(os.tmpdir(), "atdist-labels-"));
  });

  afterEach(() => {
    fs.rmSync(dir, { recursive: true, force: true });
  });

  it("deduplicates across files and sorts", () => {
    const a = path.join(dir, "a.xml");
    const b = path.join(dir, "b.xml");
    fs.writeFileSync(a, TREE_XML);
    fs.writeFileSync(b, TREE_XML.replace("Open Safe", "BREAK open safe"));
    const labels = collectLabels([a, b]);
    expect(labels).toHaveLength(5); // 4 shared + 1 new root label
    expect(labels).toEqual([...labels].sort());
  });

  it("accepts plain text lists by extension", () => {
    const txt = path.join(dir, "labels.txt");
    fs.writeFileSync(txt, "one\ntwo\none\n");
    expect(collectLabels([txt])).toEqual(["one", "two"]);
  });

  it("fails on inputs without labels", () => {
    const empty = path.join(dir, "empty.txt");
    fs.writeFileSync(empty, "\n\n");
    expect(() => collectLabels([empty])).toThrow(/no labels found/);
  });
});
