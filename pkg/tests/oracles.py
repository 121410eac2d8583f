"""Independent brute-force oracles used to freeze expected test values.

Everything here deliberately avoids the library's own algorithms:
determinants go through permutation expansion, divisibility through
schoolbook long division, multiplicative orders through repeated
multiplication, and run lengths through exhaustive window scans.
"""

from __future__ import annotations

import itertools


def perm_det(field, rows):
    """Determinant by permutation expansion (fine up to 4x4)."""
    n = len(rows)
    det = 0
    for perm in itertools.permutations(range(n)):
        sign = _perm_sign(perm)
        term = 1
        for i, j in enumerate(perm):
            term = field.mul(term, rows[i][j])
        det = field.add(det, term) if sign > 0 else field.sub(det, term)
    return det


def _perm_sign(perm) -> int:
    sign = 1
    seen = set()
    for start in range(len(perm)):
        if start in seen:
            continue
        length, j = 0, start
        while j not in seen:
            seen.add(j)
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def minor_rank(field, entries):
    """Rank as the largest k with a nonzero k x k minor."""
    nrows, ncols = len(entries), len(entries[0])
    for k in range(min(nrows, ncols), 0, -1):
        for rsel in itertools.combinations(range(nrows), k):
            for csel in itertools.combinations(range(ncols), k):
                sub = [[entries[i][j] for j in csel] for i in rsel]
                if perm_det(field, sub) != 0:
                    return k
    return 0


def long_division_remainder(field, dividend, divisor):
    """Schoolbook polynomial remainder on raw coefficient code lists."""
    rem = list(dividend)
    while rem and rem[-1] == 0:
        rem.pop()
    dd = len(divisor) - 1
    lead_inv = field.inv(divisor[-1])
    while len(rem) - 1 >= dd and rem:
        c = field.mul(rem[-1], lead_inv)
        shift = len(rem) - 1 - dd
        for i, fc in enumerate(divisor):
            rem[shift + i] = field.sub(rem[shift + i], field.mul(c, fc))
        while rem and rem[-1] == 0:
            rem.pop()
    return rem


def order_by_iteration(field, code) -> int:
    """Multiplicative order by repeated multiplication."""
    acc, order = code, 1
    while acc != 1:
        acc = field.mul(acc, code)
        order += 1
    return order


def irreducible_by_trial_division(p: int, coeffs) -> bool:
    """Monic irreducibility by exhausting all lower-degree monic divisors."""
    degree = len(coeffs) - 1
    for d in range(1, degree // 2 + 1):
        for enc in range(p**d):
            cand, e = [], enc
            for _ in range(d):
                e, c = divmod(e, p)
                cand.append(c)
            cand.append(1)
            if not _prime_field_remainder(p, list(coeffs), cand):
                return False
    return True


def _prime_field_remainder(p: int, rem, divisor):
    dd = len(divisor) - 1
    while rem and rem[-1] == 0:
        rem.pop()
    while len(rem) - 1 >= dd and rem:
        c = rem[-1] % p
        shift = len(rem) - 1 - dd
        for i, fc in enumerate(divisor):
            rem[shift + i] = (rem[shift + i] - c * fc) % p
        while rem and rem[-1] == 0:
            rem.pop()
    return rem


def longest_consecutive_window(spec, elements) -> int:
    """Longest wrap-around run of classes 1 + ri present in the set, found
    by scanning every (start, length) window exhaustively."""
    present = {(((s - 1) % spec.rn) // spec.r) % spec.n for s in elements}
    n = spec.n
    if len(present) == n:
        return n
    best = 0
    for start in range(n):
        length = 0
        while length < n and (start + length) % n in present:
            length += 1
        best = max(best, length)
    return best


def dependent_subset_min_size(field, h_entries, max_size) -> int | None:
    """Smallest dependent column multiset size, by exhaustive subsets and
    minor-expansion rank checks (only for tiny matrices)."""
    m, n = len(h_entries), len(h_entries[0])
    for w in range(1, max_size + 1):
        for csel in itertools.combinations(range(n), w):
            sub = [[h_entries[i][j] for j in csel] for i in range(m)]
            if minor_rank(field, sub) < w:
                return w
    return None
