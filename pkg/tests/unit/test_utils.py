from perlab.utils import get_similar_words, list_to_string


def test_similar_short_names():
    assert get_similar_words("Rle", ["Rel", "Q", "chain"]) == ["Rel"]
    assert get_similar_words("pre", ["per", "run", "fuel"]) == ["per"]
    assert get_similar_words("r", ["R", "S"]) == ["R"]
    assert get_similar_words("xyz", ["R", "chain"]) == []


def test_similar_longer_names():
    words = ["monotone", "morphism", "realizable", "related", "subper"]
    assert get_similar_words("monotne", words) == ["monotone"]
    assert get_similar_words("realisable", words) == ["realizable"]


def test_nearest_first():
    assert get_similar_words("chian", ["chair", "chin"]) == ["chin", "chair"]


def test_change_of_case_only():
    assert get_similar_words("CHAIN", ["chain"]) == ["chain"]


def test_list_to_string():
    assert list_to_string(["A", "B"]) == "A, B"
    assert list_to_string([]) == ""
