"""Entanglement-assisted quantum code parameters from constacyclic codes.

The ebit count is computed two independent ways: combinatorially as |T_ss|
from the defining-set decomposition, and algebraically as rank(H H^dagger)
of the parity-check matrix.  The two must agree; a mismatch is a hard error
because it can only come from an implementation defect.
"""

from __future__ import annotations

from dataclasses import dataclass

from .codes import ConstacyclicCode, build_code
from .cosets import CodeSpec, DefiningSet


class EbitOracleMismatch(RuntimeError):
    """|T_ss| and rank(H H^dagger) disagreed; both count the needed ebits."""


@dataclass(frozen=True)
class EaqParams:
    """[[n, k, d; c]]_q parameters with their verification verdicts.

    d is the BCH lower bound of the source code; when the EA-Singleton bound
    holds with equality that bound is the exact distance.  oracle_agreement
    is True when the rank oracle was run and matched |T_ss|, None when only
    the combinatorial count was computed.
    """

    q: int
    n: int
    k: int
    d: int
    c: int
    mds: bool
    oracle_agreement: bool | None = None

    def __post_init__(self) -> None:
        if not 0 <= self.c <= self.n - 1:
            raise ValueError(f"ebit count {self.c} outside [0, {self.n - 1}]")

    def __str__(self) -> str:
        return f"[[{self.n}, {self.k}, {self.d}; {self.c}]]_{self.q}"


def check_singleton(params: EaqParams) -> bool:
    """EA-Singleton bound n + c - k >= 2(d - 1); equality is the MDS case."""
    return params.n + params.c - params.k >= 2 * (params.d - 1)


def singleton_equality(params: EaqParams) -> bool:
    return params.n + params.c - params.k == 2 * (params.d - 1)


def ebits_combinatorial(t: DefiningSet) -> int:
    """Needed ebits as the size of T_ss = T & T^{-q}."""
    return len(t.t_ss)


def ebits_rank_oracle(code: ConstacyclicCode) -> int:
    """Needed ebits as rank(H H^dagger) over F_{q^2}."""
    h = code.check_matrix
    return (h @ h.conj_transpose()).rank()


def _params(spec: CodeSpec, t: DefiningSet, c: int,
            oracle_agreement: bool | None, bch: int) -> EaqParams:
    k = spec.n - 2 * len(t.elements) + c
    params = EaqParams(q=spec.q, n=spec.n, k=k, d=bch, c=c,
                       mds=spec.n + c - k == 2 * (bch - 1),
                       oracle_agreement=oracle_agreement)
    return params


def derive_eaq(code: ConstacyclicCode) -> EaqParams:
    """[[n, n - 2|T| + |T_ss|, d >= bch; |T_ss|]]_q with both ebit oracles run."""
    t = code.defining_set
    c_comb = ebits_combinatorial(t)
    c_rank = ebits_rank_oracle(code)
    if c_comb != c_rank:
        raise EbitOracleMismatch(
            f"|T_ss| = {c_comb} but rank(H H^dagger) = {c_rank} for "
            f"defining set {sorted(t.elements)} of {code.spec!r}")
    return _params(code.spec, t, c_comb, True, code.bch_delta)


def derive_eaq_combinatorial(spec: CodeSpec, t: DefiningSet) -> EaqParams:
    """Parameter derivation from set arithmetic only (no matrices built).

    Used for large catalog instances where the rank oracle is not requested;
    oracle_agreement is left None.
    """
    from .codes import bch_delta
    return _params(spec, t, ebits_combinatorial(t), None, bch_delta(t))


def derive_eaq_from_sets(spec: CodeSpec, t: DefiningSet,
                         rank_oracle: bool) -> EaqParams:
    if rank_oracle:
        return derive_eaq(build_code(spec, t))
    return derive_eaq_combinatorial(spec, t)
