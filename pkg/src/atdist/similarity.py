"""Label similarity providers and the equivalence threshold.

A provider maps two label strings to a similarity in [0, 1].  Distances
never consume the raw similarity: they ask ``equivalent(sim, eps)``, which
turns it into a binary decision.  The comparison is strict (sim > eps)
with one carve-out: at eps = 1 only a similarity of exactly 1 counts,
otherwise nothing could ever match.

Labels are trimmed before comparison; by default they are also lowercased
("Obtain personal data" and "obtain personal data" should match), which
can be switched off per provider.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np


class ConfigError(ValueError):
    """Invalid tuning parameter (epsilon, alpha, cost configuration)."""


class EmbeddingLookupError(KeyError):
    """A label has no vector in the embedding table."""

    def __init__(self, labels):
        self.labels = list(labels)
        super().__init__("no embedding for label(s): " + ", ".join(repr(l) for l in self.labels))


def validate_epsilon(value: float) -> float:
    if not 0.0 <= value <= 1.0:
        raise ConfigError(f"epsilon must be in [0, 1], got {value}")
    return float(value)


def equivalent(sim: float, eps: float) -> bool:
    """True when the similarity clears the threshold.

    Strictly greater-than, except at eps = 1 where an exact 1.0 counts as
    equivalent (identical labels must still match at the strictest
    setting).
    """
    if eps >= 1.0:
        return sim >= 1.0
    return sim > eps


def levenshtein(a: str, b: str) -> int:
    """Unit-cost edit distance over Unicode scalar values."""
    if a == b:
        return 0
    if len(a) < len(b):
        a, b = b, a
    previous = list(range(len(b) + 1))
    for i, ca in enumerate(a, start=1):
        current = [i]
        for j, cb in enumerate(b, start=1):
            current.append(
                min(
                    previous[j] + 1,
                    current[j - 1] + 1,
                    previous[j - 1] + (ca != cb),
                )
            )
        previous = current
    return previous[-1]


class _Provider:
    """Shared normalization and memo cache for all providers."""

    name = "provider"

    def __init__(self, lowercase: bool = True):
        self.lowercase = lowercase
        self._cache: dict[tuple[str, str], float] = {}

    def normalize(self, label: str) -> str:
        label = label.strip()
        return label.lower() if self.lowercase else label

    def __call__(self, a: str, b: str) -> float:
        key = (a, b)
        hit = self._cache.get(key)
        if hit is None:
            hit = self._cache[key] = self._similarity(self.normalize(a), self.normalize(b))
        return hit

    def _similarity(self, a: str, b: str) -> float:
        raise NotImplementedError


class ExactSimilarity(_Provider):
    name = "exact"

    def _similarity(self, a: str, b: str) -> float:
        return 1.0 if a == b else 0.0


class LevenshteinSimilarity(_Provider):
    """1 minus the edit distance divided by the longer length."""

    name = "levenshtein"

    def _similarity(self, a: str, b: str) -> float:
        longest = max(len(a), len(b))
        if longest == 0:
            return 1.0
        return 1.0 - levenshtein(a, b) / longest


class EmbeddingTable:
    """Label -> vector store with a uniform dimension and no zero vectors."""

    def __init__(self, vectors: dict[str, np.ndarray], dimension: int):
        self.vectors = vectors
        self.dimension = dimension

    @classmethod
    def from_mapping(cls, mapping: dict[str, list[float]], dimension: int | None = None):
        vectors: dict[str, np.ndarray] = {}
        for label, values in mapping.items():
            key = label.strip().lower()
            vec = np.asarray(values, dtype=float)
            if dimension is None:
                dimension = vec.size
            if vec.ndim != 1 or vec.size != dimension:
                raise ValueError(
                    f"embedding for {label!r} has dimension {vec.size}, expected {dimension}"
                )
            if not np.any(vec):
                raise ValueError(f"embedding for {label!r} is the zero vector")
            vectors[key] = vec
        if dimension is None:
            raise ValueError("embedding table is empty")
        return cls(vectors, dimension)

    @classmethod
    def load(cls, path) -> "EmbeddingTable":
        """Load the JSON embedding format, or TSV (label TAB floats...)."""
        p = Path(path)
        text = p.read_text(encoding="utf-8")
        stripped = text.lstrip()
        if stripped.startswith("{"):
            doc = json.loads(text)
            return cls.from_mapping(doc["embeddings"], dimension=int(doc["dimension"]))
        mapping: dict[str, list[float]] = {}
        for line in text.splitlines():
            if not line.strip():
                continue
            parts = line.split("\t")
            if len(parts) < 2:
                raise ValueError(f"{p}: TSV line needs a label and at least one value")
            mapping[parts[0]] = [float(v) for v in parts[1:]]
        return cls.from_mapping(mapping)

    def lookup(self, normalized_label: str) -> np.ndarray:
        try:
            return self.vectors[normalized_label]
        except KeyError:
            raise EmbeddingLookupError([normalized_label]) from None


class EmbeddingSimilarity(_Provider):
    """Cosine similarity over stored vectors, clamped into [0, 1].

    missing="error" raises EmbeddingLookupError for unknown labels;
    missing="zero" scores an unknown label 0 against everything except
    the identical string, which scores 1.
    """

    name = "embedding"

    def __init__(self, table: EmbeddingTable, lowercase: bool = True, missing: str = "error"):
        super().__init__(lowercase=lowercase)
        if missing not in ("error", "zero"):
            raise ConfigError(f"missing mode must be 'error' or 'zero', got {missing!r}")
        self.table = table
        self.missing = missing

    def _similarity(self, a: str, b: str) -> float:
        try:
            va = self.table.lookup(a)
            vb = self.table.lookup(b)
        except EmbeddingLookupError:
            if self.missing == "zero":
                return 1.0 if a == b else 0.0
            missing = [l for l in (a, b) if l not in self.table.vectors]
            raise EmbeddingLookupError(missing) from None
        cos = float(np.dot(va, vb) / (np.linalg.norm(va) * np.linalg.norm(vb)))
        return min(1.0, max(0.0, cos))


def sim_exact(a: str, b: str, lowercase: bool = True) -> float:
    return ExactSimilarity(lowercase=lowercase)(a, b)


def sim_levenshtein_norm(a: str, b: str, lowercase: bool = True) -> float:
    return LevenshteinSimilarity(lowercase=lowercase)(a, b)


def sim_embedding(table: EmbeddingTable, a: str, b: str, lowercase: bool = True) -> float:
    return EmbeddingSimilarity(table, lowercase=lowercase)(a, b)


def similarity_matrix(provider, labels_a, labels_b) -> np.ndarray:
    """Entry (i, j) is provider(labels_a[i], labels_b[j])."""
    matrix = np.zeros((len(labels_a), len(labels_b)))
    for i, a in enumerate(labels_a):
        for j, b in enumerate(labels_b):
            matrix[i, j] = provider(a, b)
    return matrix


def make_provider(spec: str, lowercase: bool = True):
    """Build a provider from a CLI-style spec: exact | levenshtein | embedding:<path>."""
    if spec == "exact":
        return ExactSimilarity(lowercase=lowercase)
    if spec == "levenshtein":
        return LevenshteinSimilarity(lowercase=lowercase)
    if spec.startswith("embedding"):
        _, _, path = spec.partition(":")
        if not path:
            raise ConfigError("embedding provider needs a path: embedding:<file>")
        return EmbeddingSimilarity(EmbeddingTable.load(path), lowercase=lowercase)
    raise ConfigError(f"unknown provider {spec!r}")
