"""Independent oracles the tests check the library against.

Everything here is deliberately naive: literal adjacent transpositions for
torus normal ordering, a full 2^(mn) filter for diagram enumeration, and a
from-scratch statement of the diagram condition.  None of it shares code
with the library paths it validates.
"""

from qmpaths.coeff import q_power
from qmpaths.torus import TorusElement, mono_key, pair_commutation


def oracle_sort_word(word):
    """Normal-order a word of (i, j, e) letters by bubble-sorting adjacent
    pairs, accumulating the q-exponent one transposition at a time.

    Returns (qexp, key) with t-word = q^qexp * t^key.
    """
    letters = list(word)
    qexp = 0
    changed = True
    while changed:
        changed = False
        for k in range(len(letters) - 1):
            i1, j1, e1 = letters[k]
            i2, j2, e2 = letters[k + 1]
            if (i1, j1) > (i2, j2):
                qexp += e1 * e2 * pair_commutation((i1, j1), (i2, j2))
                letters[k], letters[k + 1] = letters[k + 1], letters[k]
                changed = True
    return qexp, mono_key(letters)


def expand_key(key):
    """Unit letters of a canonical exponent key."""
    out = []
    for i, j, e in key:
        step = 1 if e > 0 else -1
        out.extend([(i, j, step)] * abs(e))
    return tuple(out)


def oracle_monomial_mul(a, b):
    """(c, a+b) with t^a t^b = q^c t^(a+b), via literal transpositions."""
    return oracle_sort_word(expand_key(a) + expand_key(b))


def oracle_word_element(shape, word):
    """TorusElement of a generator word, via the transposition oracle."""
    qexp, key = oracle_sort_word(word)
    return TorusElement.monomial(shape, key, q_power(qexp))


def oracle_is_cauchon(black, m, n):
    """Every black square has an all-black row prefix or column prefix."""
    for (i, j) in black:
        left = all((i, jj) in black for jj in range(1, j))
        above = all((ii, j) in black for ii in range(1, i))
        if not (left or above):
            return False
    return True


def oracle_all_cauchon_sets(m, n):
    """All Cauchon colorings as frozensets, by filtering all 2^(mn) masks."""
    coords = [(i, j) for i in range(1, m + 1) for j in range(1, n + 1)]
    out = []
    for mask in range(1 << (m * n)):
        black = frozenset(c for k, c in enumerate(coords) if (mask >> k) & 1)
        if oracle_is_cauchon(black, m, n):
            out.append(black)
    return out


def oracle_inversions(perm):
    return sum(
        1
        for a in range(len(perm))
        for b in range(a + 1, len(perm))
        if perm[a] > perm[b]
    )
