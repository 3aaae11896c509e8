export { EmbeddingModel, HashedNgramModel, resolveModel } from "./embedder.js";
export { ExportManifest, exportEmbeddings } from "./exporter.js";
export { collectLabels, labelsFromLines, labelsFromXml, normalizeLabel } from "./labels.js";
export { EmbeddingFile, serializeEmbeddingFile } from "./writer.js";
