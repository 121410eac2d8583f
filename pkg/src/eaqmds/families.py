"""The four defining-set constructions and their parameter families.

Each family fixes (r, n) as a function of q, assembles the defining set as
an interval of cosets, and predicts |T_ss| from its threshold on the range
index k.  enumerate_family replays the whole pipeline for every admissible
distance and verifies the prediction against the computed decomposition
(and, optionally, against the parity-check rank oracle).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .cosets import CodeSpec, DefiningSet, make_spec
from .eaq import EaqParams, derive_eaq_from_sets, singleton_equality
from .fields import factorize, is_prime


class FamilyId(Enum):
    """The supported constructions.

    Q2P1_NEGA / Q2P1_CONSTA: length q^2 + 1 (negacyclic for q = 1 mod 4,
    constacyclic with r = q + 1 for q = 3 mod 4), four ebits.
    TENTH_3 / TENTH_7: negacyclic length (q^2 + 1)/10 for q = 10m + 3 or
    10m + 7, one ebit.
    QM1_H: constacyclic length (q^2 - 1)/h for h in {3, 5, 7} dividing q + 1,
    one ebit.
    """

    Q2P1_NEGA = "Q2P1_NEGA"
    Q2P1_CONSTA = "Q2P1_CONSTA"
    TENTH_3 = "TENTH_3"
    TENTH_7 = "TENTH_7"
    QM1_H = "QM1_H"


FAMILY_ORDER = list(FamilyId)


class FamilyError(ValueError):
    """The requested (family, q, h) combination is not applicable."""


class VerificationError(RuntimeError):
    """A family instance failed one of its mandatory cross-checks."""


def _require_odd_prime_power(q: int) -> None:
    if q % 2 == 0 or q < 3:
        raise FamilyError(f"q={q} must be an odd prime power")
    facts = factorize(q)
    if len(facts) != 1 or not is_prime(next(iter(facts))):
        raise FamilyError(f"q={q} must be an odd prime power")


def check_applicable(family: FamilyId, q: int, h: int | None = None) -> None:
    _require_odd_prime_power(q)
    if family is FamilyId.Q2P1_NEGA:
        if q % 4 != 1 or q < 5:
            raise FamilyError(f"q={q}: negacyclic length q^2+1 needs q = 1 mod 4, q >= 5")
    elif family is FamilyId.Q2P1_CONSTA:
        if q % 4 != 3 or q < 7:
            raise FamilyError(f"q={q}: constacyclic length q^2+1 needs q = 3 mod 4, q >= 7")
    elif family is FamilyId.TENTH_3:
        if q % 10 != 3 or q < 13:
            raise FamilyError(f"q={q}: length (q^2+1)/10 needs q = 10m+3 with m >= 1")
    elif family is FamilyId.TENTH_7:
        if q % 10 != 7 or q < 17:
            raise FamilyError(f"q={q}: length (q^2+1)/10 needs q = 10m+7 with m >= 1")
    elif family is FamilyId.QM1_H:
        if h not in (3, 5, 7):
            raise FamilyError(f"h={h} must be one of 3, 5, 7")
        if (q + 1) % h != 0:
            raise FamilyError(f"h={h} must divide q+1={q + 1}")
    if family is not FamilyId.QM1_H and h is not None:
        raise FamilyError(f"{family.value} takes no h parameter")


def family_spec(family: FamilyId, q: int, h: int | None = None) -> CodeSpec:
    check_applicable(family, q, h)
    if family is FamilyId.Q2P1_NEGA:
        return make_spec(q, 2, q * q + 1)
    if family is FamilyId.Q2P1_CONSTA:
        return make_spec(q, q + 1, q * q + 1)
    if family in (FamilyId.TENTH_3, FamilyId.TENTH_7):
        return make_spec(q, 2, (q * q + 1) // 10)
    return make_spec(q, h, (q * q - 1) // h)


def k_range(family: FamilyId, q: int, h: int | None = None) -> tuple[int, int]:
    """Inclusive range of the coset index k covered by the construction."""
    check_applicable(family, q, h)
    if family in (FamilyId.Q2P1_NEGA, FamilyId.Q2P1_CONSTA):
        return 0, (3 * q - 3) // 2
    if family is FamilyId.TENTH_3:
        return 0, 3 * ((q - 3) // 10)
    if family is FamilyId.TENTH_7:
        return 0, 3 * ((q - 7) // 10) + 1
    return (h - 3) * (q + 1) // (2 * h), q - 2


def tss_threshold(family: FamilyId, q: int, h: int | None = None) -> int:
    """Smallest k at which the predicted |T_ss| jumps to its nonzero value."""
    if family in (FamilyId.Q2P1_NEGA, FamilyId.Q2P1_CONSTA):
        return (q + 1) // 2
    if family in (FamilyId.TENTH_3, FamilyId.TENTH_7):
        return 0
    return (h - 1) * (q + 1) // (2 * h) - 1


@dataclass(frozen=True)
class FamilyInstance:
    family: FamilyId
    q: int
    h: int | None
    k: int
    spec: CodeSpec
    t: DefiningSet
    predicted_tss: int

    def label(self) -> str:
        h = f" h={self.h}" if self.h is not None else ""
        return f"{self.family.value} q={self.q}{h} k={self.k}"


def family_defining_set(family: FamilyId, q: int, h: int | None = None,
                        k: int = 0) -> FamilyInstance:
    """The instance at range index k, with its predicted |T_ss|."""
    spec = family_spec(family, q, h)
    lo, hi = k_range(family, q, h)
    if not lo <= k <= hi:
        raise FamilyError(f"k={k} outside the proved range [{lo}, {hi}] "
                          f"for {family.value} q={q}")
    n = spec.n
    if family is FamilyId.Q2P1_NEGA:
        leaders = [n // 2 + 2 * i for i in range(k + 1)]
    elif family is FamilyId.Q2P1_CONSTA:
        leaders = [n // 2 + (q + 1) * i for i in range(k + 1)]
    elif family in (FamilyId.TENTH_3, FamilyId.TENTH_7):
        leaders = [n + 2 * i for i in range(k + 1)]
    else:
        leaders = [1 + h * i for i in range((h - 3) * (q + 1) // (2 * h), k + 1)]
    t = DefiningSet.from_leaders(spec, leaders)
    return FamilyInstance(family=family, q=q, h=h, k=k, spec=spec, t=t,
                          predicted_tss=predicted_tss_at(family, q, h, k))


def predicted_tss_at(family: FamilyId, q: int, h: int | None, k: int) -> int:
    threshold = tss_threshold(family, q, h)
    if family in (FamilyId.Q2P1_NEGA, FamilyId.Q2P1_CONSTA):
        return 4 if k >= threshold else 0
    return 1 if k >= threshold else 0


def predicted_tss(instance: FamilyInstance) -> int:
    return predicted_tss_at(instance.family, instance.q, instance.h, instance.k)


def instance_params(instance: FamilyInstance, rank_oracle: bool = False) -> EaqParams:
    """Verified EA parameters for one instance.

    Checks, in order: the defining set is a single consecutive run so the
    BCH bound is |T| + 1; the computed |T_ss| matches the family prediction
    (and the rank oracle when requested); Singleton equality holds whenever
    the predicted ebit count is hit.
    """
    t = instance.t
    params = derive_eaq_from_sets(instance.spec, t, rank_oracle)
    failures = []
    if params.d != len(t.elements) + 1:
        failures.append(f"defining set is not a single run: bch={params.d}, |T|={len(t.elements)}")
    if len(t.t_ss) != instance.predicted_tss:
        failures.append(f"|T_ss|={len(t.t_ss)} but the family predicts {instance.predicted_tss}")
    if params.c != instance.predicted_tss:
        failures.append(f"derived c={params.c} differs from predicted {instance.predicted_tss}")
    if not singleton_equality(params):
        failures.append(f"Singleton equality fails for {params}")
    if failures:
        raise VerificationError(f"{instance.label()}: " + "; ".join(failures))
    return params


def enumerate_family(family: FamilyId, q: int, h: int | None = None, *,
                     rank_oracle: bool = False,
                     include_qmds_datapoints: bool = False) -> list[EaqParams]:
    """One verified EaqParams per admissible distance of the construction.

    The default range covers the nonzero ebit count (4 or 1); with
    include_qmds_datapoints the dual-containing low-distance instances of
    the length-q^2+1 families are emitted too, as c = 0 rows.
    """
    lo, hi = k_range(family, q, h)
    threshold = tss_threshold(family, q, h)
    start = threshold if not include_qmds_datapoints else lo
    start = max(start, lo)
    out = []
    for k in range(start, hi + 1):
        instance = family_defining_set(family, q, h, k)
        if not include_qmds_datapoints and instance.predicted_tss == 0:
            continue
        out.append(instance_params(instance, rank_oracle=rank_oracle))
    return out


def family_instances(family: FamilyId, q: int, h: int | None = None,
                     include_qmds_datapoints: bool = True) -> list[FamilyInstance]:
    """All instances of the construction's k-range, sub-threshold included."""
    lo, hi = k_range(family, q, h)
    start = lo if include_qmds_datapoints else max(lo, tss_threshold(family, q, h))
    return [family_defining_set(family, q, h, k) for k in range(start, hi + 1)]


def applicable_combos(q_values: list[int]) -> list[tuple[FamilyId, int, int | None]]:
    """Every (family, q, h) combination applicable among the given q."""
    combos: list[tuple[FamilyId, int, int | None]] = []
    for family in FAMILY_ORDER:
        for q in sorted(q_values):
            if family is FamilyId.QM1_H:
                for h in (3, 5, 7):
                    try:
                        check_applicable(family, q, h)
                    except FamilyError:
                        continue
                    combos.append((family, q, h))
            else:
                try:
                    check_applicable(family, q)
                except FamilyError:
                    continue
                combos.append((family, q, None))
    return combos


def odd_prime_powers(limit: int) -> list[int]:
    out = []
    for q in range(3, limit + 1, 2):
        facts = factorize(q)
        if len(facts) == 1:
            out.append(q)
    return out
