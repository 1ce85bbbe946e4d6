"""Small helpers shared by the workbench modules."""

from typing import Dict, Iterable, List


def get_similar_words(word_with_typo: str, words: Iterable[str]) -> List[str]:
    """Returns the declared names closest to an unknown one, nearest first.

    The allowed edit distance grows with the length of the name: one edit
    up to four characters, two up to eight, three beyond. Single character
    names are only matched up to a change of case (``r`` for ``R``).
    """
    candidates = sorted(set(words))  # predictable order for tests
    if len(word_with_typo) == 1:
        return [word for word in candidates if word.lower() == word_with_typo.lower()]

    if len(word_with_typo) <= 4:
        candidates = [word for word in candidates if 1 <= len(word) <= 5]
        max_dist = 1
    elif len(word_with_typo) <= 8:
        candidates = [word for word in candidates if 4 <= len(word) <= 10]
        max_dist = 2
    else:
        candidates = [word for word in candidates if len(word) >= 7]
        max_dist = 3

    by_distance: Dict[int, List[str]] = {}
    for word in candidates:
        distance = _leven(word_with_typo, word, max_dist + 1)
        if 0 < distance <= max_dist:
            by_distance.setdefault(distance, []).append(word)

    similar: List[str] = []
    for distance in range(1, max_dist + 1):
        similar.extend(by_distance.get(distance, []))
    if not similar:
        for word in candidates:
            if word.lower() == word_with_typo.lower() and word != word_with_typo:
                similar.append(word)
    return similar


def _leven(s1: str, s2: str, max_distance: int) -> int:
    """Damerau-Levenshtein distance (adjacent transpositions cost 1),
    capped at ``max_distance``; only two previous rows are kept."""
    if len(s1) > len(s2):
        s1, s2 = s2, s1
    before_previous: List[int] = []
    previous: List[int] = []
    current = list(range(len(s1) + 1))
    for row in range(1, len(s2) + 1):
        before_previous, previous, current = previous, current, [row] + [0] * len(s1)
        if before_previous and min(before_previous) > max_distance:
            return max_distance
        for col in range(1, len(s1) + 1):
            substitution = previous[col - 1] + (s1[col - 1] != s2[row - 1])
            current[col] = min(current[col - 1] + 1, previous[col] + 1, substitution)
            if (
                row > 1
                and col > 1
                and s1[col - 1] == s2[row - 2]
                and s1[col - 2] == s2[row - 1]
            ):
                current[col] = min(current[col], before_previous[col - 2] + 1)
    return current[-1]


def list_to_string(items: Iterable[str], sep: str = ", ") -> str:
    return sep.join(str(item) for item in items)
