import json
import random
from functools import lru_cache

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from atdist import (
    ConfigError,
    EmbeddingLookupError,
    EmbeddingSimilarity,
    EmbeddingTable,
    ExactSimilarity,
    LevenshteinSimilarity,
    equivalent,
    levenshtein,
    make_provider,
    sim_exact,
    sim_levenshtein_norm,
    similarity_matrix,
)
from atdist.similarity import validate_epsilon


@lru_cache(maxsize=None)
def lev_by_definition(a: str, b: str) -> int:
    """Recursive edit-distance definition; the independent oracle."""
    if not a:
        return len(b)
    if not b:
        return len(a)
    return min(
        lev_by_definition(a[1:], b) + 1,
        lev_by_definition(a, b[1:]) + 1,
        lev_by_definition(a[1:], b[1:]) + (a[0] != b[0]),
    )


def test_levenshtein_known_values():
    assert levenshtein("kitten", "sitting") == lev_by_definition("kitten", "sitting") == 3
    assert levenshtein("abc", "abc") == 0
    assert levenshtein("", "abc") == 3
    assert levenshtein("abc", "") == 3


def test_levenshtein_against_oracle_on_random_pairs():
    rng = random.Random(20240817)
    alphabet = "abcde"
    for _ in range(1000):
        a = "".join(rng.choice(alphabet) for _ in range(rng.randint(0, 7)))
        b = "".join(rng.choice(alphabet) for _ in range(rng.randint(0, 7)))
        want = lev_by_definition(a, b)
        assert levenshtein(a, b) == want, (a, b)
        want_norm = 1.0 if not (a or b) else 1.0 - want / max(len(a), len(b))
        assert sim_levenshtein_norm(a, b) == pytest.approx(want_norm), (a, b)


def test_sim_exact():
    assert sim_exact("open door", "open door") == 1.0
    assert sim_exact("open door", "door open") == 0.0
    assert sim_exact("A", "B") == 0.0


def test_exact_lowercases_by_default():
    assert sim_exact("Obtain personal data", "obtain personal data") == 1.0
    assert sim_exact("Obtain personal data", "obtain personal data", lowercase=False) == 0.0


def test_sim_levenshtein_norm_values():
    assert sim_levenshtein_norm("abc", "abc") == 1.0
    assert sim_levenshtein_norm("abcd", "abce") == pytest.approx(
        1 - lev_by_definition("abcd", "abce") / 4
    )
    assert sim_levenshtein_norm("abcd", "abce") == pytest.approx(0.75)
    got = sim_levenshtein_norm("door open", "open door")
    assert got == pytest.approx(1 - lev_by_definition("door open", "open door") / 9)


def test_sim_levenshtein_norm_empty_inputs():
    assert sim_levenshtein_norm("", "") == 1.0
    assert sim_levenshtein_norm("", "abc") == 0.0


@given(st.text(max_size=12), st.text(max_size=12))
@settings(max_examples=200, deadline=None)
def test_provider_symmetry(a, b):
    for provider in (ExactSimilarity(), LevenshteinSimilarity()):
        assert provider(a, b) == provider(b, a)
        assert 0.0 <= provider(a, b) <= 1.0


@given(st.text(max_size=12))
@settings(max_examples=100, deadline=None)
def test_provider_identity(a):
    for provider in (ExactSimilarity(), LevenshteinSimilarity()):
        assert provider(a, a) == 1.0


def test_equivalent_gate():
    assert equivalent(0.9, 0.7) is True
    assert equivalent(0.7, 0.7) is False  # strict comparison
    assert equivalent(0.0, 0.0) is False


def test_equivalent_at_epsilon_one():
    # at the strictest setting only a perfect similarity matches
    assert equivalent(1.0, 1.0) is True
    assert equivalent(0.999999, 1.0) is False


def test_equivalent_monotone_in_similarity():
    rng = random.Random(7)
    for _ in range(500):
        eps = rng.random()
        s = rng.random()
        s2 = min(1.0, s + rng.random() * (1 - s))
        if equivalent(s, eps):
            assert equivalent(s2, eps)


def test_validate_epsilon():
    assert validate_epsilon(0.7) == 0.7
    for bad in (-0.1, 1.1):
        with pytest.raises(ConfigError):
            validate_epsilon(bad)


def test_similarity_matrix_shapes_and_values(exact):
    assert similarity_matrix(exact, ["x"], ["x"]).tolist() == [[1.0]]
    assert similarity_matrix(exact, ["x", "y"], ["y"]).tolist() == [[0.0], [1.0]]
    assert similarity_matrix(exact, ["a", "b"], ["a", "b", "c"]).shape == (2, 3)


@pytest.fixture
def table(tmp_path):
    doc = {
        "dimension": 3,
        "embeddings": {
            "open door": [1.0, 0.0, 0.0],
            "door open": [0.9, 0.1, 0.0],
            "crack safe": [0.0, 1.0, 0.0],
            "scaled": [2.0, 0.0, 0.0],
            "opposite": [-1.0, 0.0, 0.0],
        },
    }
    path = tmp_path / "embeddings.json"
    path.write_text(json.dumps(doc))
    return EmbeddingTable.load(path)


def test_embedding_identity_orthogonal_scale(table):
    provider = EmbeddingSimilarity(table)
    assert provider("open door", "open door") == 1.0
    assert provider("open door", "crack safe") == 0.0
    assert provider("open door", "scaled") == pytest.approx(1.0)  # cosine ignores scale


def test_embedding_negative_cosine_clamps(table):
    provider = EmbeddingSimilarity(table)
    assert provider("open door", "opposite") == 0.0


def test_embedding_missing_label(table):
    provider = EmbeddingSimilarity(table)
    with pytest.raises(EmbeddingLookupError) as err:
        provider("open door", "unknown thing")
    assert "unknown thing" in str(err.value)


def test_embedding_missing_fallback_zero(table):
    provider = EmbeddingSimilarity(table, missing="zero")
    assert provider("unknown thing", "unknown thing") == 1.0
    assert provider("unknown thing", "open door") == 0.0


def test_embedding_table_rejects_zero_vector():
    with pytest.raises(ValueError):
        EmbeddingTable.from_mapping({"a": [0.0, 0.0]})


def test_embedding_table_rejects_mixed_dimension():
    with pytest.raises(ValueError):
        EmbeddingTable.from_mapping({"a": [1.0, 0.0], "b": [1.0]})


def test_embedding_table_tsv(tmp_path):
    path = tmp_path / "embeddings.tsv"
    path.write_text("Open Door\t1.0\t0.0\nsafe\t0.0\t1.0\n")
    table = EmbeddingTable.load(path)
    assert table.dimension == 2
    assert "open door" in table.vectors  # keys normalized on load


def test_make_provider(tmp_path):
    assert make_provider("exact").name == "exact"
    assert make_provider("levenshtein").name == "levenshtein"
    path = tmp_path / "e.json"
    path.write_text(json.dumps({"dimension": 2, "embeddings": {"a": [1.0, 0.0]}}))
    assert make_provider(f"embedding:{path}").name == "embedding"
    with pytest.raises(ConfigError):
        make_provider("embedding")
    with pytest.raises(ConfigError):
        make_provider("bert")
