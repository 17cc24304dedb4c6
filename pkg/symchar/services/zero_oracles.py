"""
Certificates that chi^alpha(beta) vanishes or does not vanish, decided
from the shapes of alpha and beta instead of the full recursion.

Every rule here is a sufficient condition. A certificate can always be
re-checked against the exact value with `certify(..., verify=True)`.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Dict, List, NamedTuple, Optional, Sequence

from sympy import primefactors, primerange

from symchar.config import CERTIFIER_SETTINGS, TABLE_MAX_N
from symchar.exceptions import DomainError
from symchar.models.certificate import Certificate, Rule, Verdict
from symchar.models.reports import ScanReport, VanishingClass
from symchar.services.character_engine import RemovalSequence, degree, is_p_singular, mn_value, removal_sequences
from symchar.services.partition_core import (
    Parity,
    Partition,
    format_partition,
    is_p_adic_type,
    is_self_conjugate,
    lcm_of_parts,
    p_valuation,
    parity,
    partitions_of,
    require_prime,
)
from symchar.services.self_conjugate_gaps import (
    SelfConjugateShape,
    all_ladders,
    gap_set,
    self_conj_even_big_part,
)

logger = logging.getLogger(__name__)


def _require_same_size(alpha: Partition, beta: Partition):
    if alpha.n != beta.n:
        raise DomainError(
            f"Character and class sizes differ: |{format_partition(alpha)}| = {alpha.n}, "
            f"|{format_partition(beta)}| = {beta.n}"
        )


def _issue(alpha: Partition, beta: Partition, verdict: Verdict, rule: Rule, **witness) -> Certificate:
    return Certificate(
        alpha=format_partition(alpha),
        beta=format_partition(beta),
        verdict=verdict,
        rule=rule,
        witness=witness,
    )


# ---------------------------------------------------------------------------
# Weight sets
# ---------------------------------------------------------------------------

def frobenius_number(a: int, b: int) -> int:
    """Largest integer that is not a nonnegative combination of coprime a and b."""
    if a < 1 or b < 1 or math.gcd(a, b) != 1:
        raise DomainError(f"Frobenius number needs coprime positive integers, got {a}, {b}")
    return a * b - a - b


def weight_set_contains(k: int, m: int) -> bool:
    """Is k a nonnegative integer combination of the distinct primes dividing m?"""
    if m < 1:
        raise DomainError(f"Modulus must be positive, got {m}")
    if k < 0:
        raise DomainError(f"Weight must be nonnegative, got {k}")
    primes = primefactors(m)
    if k == 0:
        return True
    if not primes:
        return False
    if len(primes) == 1:
        return k % primes[0] == 0

    p, q = primes[0], primes[1]
    if k > frobenius_number(p, q):
        return True
    reachable = [True] + [False] * k
    for total in range(1, k + 1):
        reachable[total] = any(total >= prime and reachable[total - prime] for prime in primes)
    return reachable[k]


def certify_nonzero(alpha: Partition, beta: Partition) -> Optional[Certificate]:
    """
    Nonzero when the degree of alpha is not in the weight set of the
    order of beta. The prime-power and two-prime Frobenius cases are
    tried first so they keep their own tags.
    """
    _require_same_size(alpha, beta)
    if not beta.parts:
        return None
    lcm = lcm_of_parts(beta)
    if lcm.value == 1:
        return None

    deg = degree(alpha)
    primes = list(lcm.factors)
    if len(primes) == 1 and deg % primes[0]:
        return _issue(alpha, beta, Verdict.NONZERO, Rule.PRIME_POWER_DEGREE,
                      lcm=str(lcm.value), prime=primes[0], degree=str(deg))
    if len(primes) == 2 and deg == frobenius_number(*primes):
        return _issue(alpha, beta, Verdict.NONZERO, Rule.FROBENIUS_DEGREE,
                      lcm=str(lcm.value), primes=primes, degree=str(deg))
    if not weight_set_contains(deg, lcm.value):
        return _issue(alpha, beta, Verdict.NONZERO, Rule.WEIGHT_SET,
                      lcm=str(lcm.value), primes=primes, degree=str(deg))
    return None


# ---------------------------------------------------------------------------
# Vanishing rules
# ---------------------------------------------------------------------------

def certify_zero_hook_chain(alpha: Partition, beta: Partition) -> Optional[Certificate]:
    """
    Zero for a hook alpha = (a, 1^(n-a)), n-a >= a > 1, at a class made of
    one a-cycle, one fixed point and cycles of length at least a.
    """
    _require_same_size(alpha, beta)
    parts = alpha.parts
    if not parts:
        return None
    a = parts[0]
    n = alpha.n
    if a <= 1 or any(part != 1 for part in parts[1:]) or n - a < a:
        return None

    rest = list(beta.parts)
    for needed in (a, 1):
        if needed not in rest:
            return None
        rest.remove(needed)
    if any(part < a for part in rest):
        return None
    return _issue(alpha, beta, Verdict.ZERO, Rule.HOOK_CHAIN_MISSING, arm=a, others=rest)


@lru_cache(maxsize=None)
def _p_vanishing(parts: tuple, p: int) -> bool:
    beta = Partition(parts)
    for alpha in partitions_of(beta.n):
        if degree(alpha) % p == 0 and mn_value(alpha, beta) != 0:
            return False
    return True


def is_p_vanishing_class(n: int, p: int, beta: Partition) -> bool:
    """Does every irreducible character of S_n with degree divisible by p vanish at beta?"""
    require_prime(p)
    if beta.n != n:
        raise DomainError(f"({format_partition(beta)}) is not a partition of {n}")
    return _p_vanishing(beta.parts, p)


def _vanishing_path(gamma: Partition, p: int) -> Optional[str]:
    if is_p_adic_type(gamma, p):
        return "p_adic"
    if gamma.n <= CERTIFIER_SETTINGS["vanishing_brute_force_max"] and is_p_vanishing_class(gamma.n, p, gamma):
        return "exhaustive"
    return None


def _process_certificate(
    alpha: Partition,
    beta: Partition,
    s: int,
    p: int,
    sequences: Sequence[RemovalSequence],
) -> Optional[Certificate]:
    gamma = Partition(beta.parts[s:])
    if gamma.n <= 1:
        return None

    results: Dict[str, int] = {}
    for sequence in sequences:
        deg = degree(sequence.result)
        if deg % p:
            return None
        results[format_partition(sequence.result)] = p_valuation(deg, p)

    path = _vanishing_path(gamma, p)
    if path is None:
        return None
    return _issue(
        alpha, beta, Verdict.ZERO, Rule.PROCESS_VANISHING,
        s=s,
        p=p,
        sequences=len(sequences),
        results=[{"partition": key, "degree_valuation": value} for key, value in results.items()],
        gamma=format_partition(gamma),
        vanishing_path=path,
    )


def certify_zero_process(alpha: Partition, beta: Partition, s: int, p: int) -> Optional[Certificate]:
    """
    Zero when every way of removing hooks of lengths beta_1..beta_s leaves
    a character of degree divisible by p, and the remaining class
    (beta_{s+1}, ...) is p-vanishing.
    """
    _require_same_size(alpha, beta)
    require_prime(p)
    if not 1 <= s < len(beta):
        raise DomainError(f"Split index s = {s} outside 1..{len(beta) - 1}")
    sequences = removal_sequences(alpha, beta.parts[:s])
    return _process_certificate(alpha, beta, s, p, sequences)


class SingleRemovalMatch(NamedTuple):
    """alpha = (a, cp+1, 2^l, 1^k), beta = (a+l+k+1, gamma)."""
    a: int
    c: int
    l: int
    k: int
    p: int
    gamma: Partition


class DoubleRemovalMatch(NamedTuple):
    """alpha = (a, b, cp+2, 3^l, 2^t, 1^k), beta = (a+l+t+k+2, b+l+t, gamma)."""
    a: int
    b: int
    c: int
    l: int
    t: int
    k: int
    p: int
    gamma: Partition


def _tail_counts(tail: Sequence[int], allowed: Sequence[int]) -> Optional[Dict[int, int]]:
    if any(part not in allowed for part in tail):
        return None
    return {value: tail.count(value) for value in allowed}


def match_single_removal_shape(alpha: Partition, beta: Partition) -> Optional[SingleRemovalMatch]:
    parts = alpha.parts
    if len(parts) < 2 or len(beta) < 2 or alpha.n != beta.n:
        return None
    a, q = parts[0], parts[1]
    counts = _tail_counts(parts[2:], (2, 1))
    if q < 3 or counts is None:
        return None
    l, k = counts[2], counts[1]
    if beta[0] != a + l + k + 1:
        return None

    gamma = Partition(beta.parts[1:])
    for p in map(int, primefactors(q - 1)):
        if l % p and is_p_adic_type(gamma, p):
            return SingleRemovalMatch(a, (q - 1) // p, l, k, p, gamma)
    return None


def match_double_removal_shape(alpha: Partition, beta: Partition) -> Optional[DoubleRemovalMatch]:
    parts = alpha.parts
    if len(parts) < 3 or len(beta) < 3 or alpha.n != beta.n:
        return None
    a, b, q = parts[0], parts[1], parts[2]
    counts = _tail_counts(parts[3:], (3, 2, 1))
    if q < 4 or counts is None:
        return None
    l, t, k = counts[3], counts[2], counts[1]
    if t < 1 or beta[0] != a + l + t + k + 2 or beta[1] != b + l + t:
        return None

    gamma = Partition(beta.parts[2:])
    for p in map(int, primefactors(q - 2)):
        if l % p and is_p_adic_type(gamma, p):
            return DoubleRemovalMatch(a, b, (q - 2) // p, l, t, k, p, gamma)
    return None


def certify_self_conjugate_odd(alpha: Partition, beta: Partition) -> Optional[Certificate]:
    """Zero for a self-conjugate alpha at any odd class."""
    _require_same_size(alpha, beta)
    if is_self_conjugate(alpha) and parity(beta) is Parity.ODD:
        return _issue(alpha, beta, Verdict.ZERO, Rule.SELF_CONJ_ODD, parity=Parity.ODD.value)
    return None


def certify_gap_interval(alpha: Partition, beta: Partition) -> Optional[Certificate]:
    """Zero when a part of beta lies in the hook-length gap set of a self-conjugate alpha."""
    _require_same_size(alpha, beta)
    if not alpha.parts or not is_self_conjugate(alpha):
        return None
    shape = SelfConjugateShape.of(alpha)
    gaps = gap_set(shape)
    for part in sorted(set(beta.parts), reverse=True):
        if part not in gaps:
            continue
        piece = next(interval for interval in gaps if interval.contains(part))
        ladder = next(
            (f"{direction.value}{v}" for v, direction, interval in all_ladders(shape) if interval.contains(part)),
            None,
        )
        return _issue(alpha, beta, Verdict.ZERO, Rule.GAP_INTERVAL,
                      part=part, interval=[piece.lo, piece.hi], ladder=ladder)
    return None


# ---------------------------------------------------------------------------
# Combined certifier
# ---------------------------------------------------------------------------

def _shape_match_certificate(alpha: Partition, beta: Partition) -> Optional[Certificate]:
    for s, match in ((1, match_single_removal_shape(alpha, beta)), (2, match_double_removal_shape(alpha, beta))):
        if match is None:
            continue
        certificate = certify_zero_process(alpha, beta, s, match.p)
        if certificate is None:
            logger.warning(
                f"Shape match {match._asdict()} for ({format_partition(alpha)}) at "
                f"({format_partition(beta)}) did not pass the removal-process check"
            )
            continue
        certificate.witness["shape"] = {
            key: (format_partition(value) if isinstance(value, Partition) else value)
            for key, value in match._asdict().items()
        }
        return certificate
    return None


def _general_process_certificate(alpha: Partition, beta: Partition) -> Optional[Certificate]:
    max_split = min(len(beta) - 1, CERTIFIER_SETTINGS["process_max_split"])
    primes = [int(p) for p in primerange(2, alpha.n + 1)]
    for s in range(1, max_split + 1):
        sequences = removal_sequences(alpha, beta.parts[:s])
        for p in primes:
            certificate = _process_certificate(alpha, beta, s, p, sequences)
            if certificate is not None:
                return certificate
    return None


def certify(
    alpha: Partition,
    beta: Partition,
    fallback_exact: bool = False,
    verify: bool = False,
) -> Optional[Certificate]:
    """
    First certificate in precedence order: self-conjugate shortcuts,
    non-vanishing rules, the hook chain, the shape matches, then the
    general removal process. With fallback_exact the exact value decides
    when no rule fires.
    """
    _require_same_size(alpha, beta)

    chain = []
    if alpha.parts and is_self_conjugate(alpha):
        chain += [
            certify_self_conjugate_odd,
            certify_gap_interval,
            lambda a, b: self_conj_even_big_part(SelfConjugateShape.of(a), b),
        ]
    chain += [
        certify_nonzero,
        certify_zero_hook_chain,
        _shape_match_certificate,
        _general_process_certificate,
    ]

    certificate = None
    for rule in chain:
        certificate = rule(alpha, beta)
        if certificate is not None:
            break

    if certificate is None and fallback_exact:
        value = mn_value(alpha, beta)
        certificate = _issue(
            alpha, beta,
            Verdict.ZERO if value == 0 else Verdict.NONZERO,
            Rule.EXACT_MN,
            value=str(value),
        )

    if certificate is not None and verify:
        value = mn_value(alpha, beta)
        certificate.verified_by_mn = certificate.agrees_with(value)
        if not certificate.verified_by_mn:
            logger.error(
                f"{certificate.rule.value} claims {certificate.verdict.value} for "
                f"({certificate.alpha}) at ({certificate.beta}) but the exact value is {value}"
            )
    return certificate


@dataclass
class VerifySummary:
    max_n: int
    pairs: int = 0
    certified: int = 0
    by_rule: Dict[str, int] = field(default_factory=dict)
    contradictions: List[Certificate] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "max_n": self.max_n,
            "pairs": self.pairs,
            "certified": self.certified,
            "by_rule": dict(sorted(self.by_rule.items())),
            "contradictions": [c.model_dump(mode="json") for c in self.contradictions],
        }


def verify_certificates(max_n: int) -> VerifySummary:
    """Certify and re-check every (alpha, beta) with |alpha| <= max_n."""
    summary = VerifySummary(max_n=max_n)
    for n in range(1, max_n + 1):
        classes = list(partitions_of(n))
        for alpha in classes:
            for beta in classes:
                summary.pairs += 1
                certificate = certify(alpha, beta, verify=True)
                if certificate is None:
                    continue
                summary.certified += 1
                summary.by_rule[certificate.rule.value] = summary.by_rule.get(certificate.rule.value, 0) + 1
                if not certificate.verified_by_mn:
                    summary.contradictions.append(certificate)
        logger.info(f"Verified n = {n}: {summary.certified}/{summary.pairs} pairs certified so far")
    return summary


# ---------------------------------------------------------------------------
# p-vanishing scans
# ---------------------------------------------------------------------------

def scan_p_vanishing(n: int, p: int, jobs: int = 1, max_n: Optional[int] = TABLE_MAX_N) -> ScanReport:
    """
    Every p-vanishing class of S_n flagged by p-adic type. A p-adic-type
    class that is not p-vanishing is recorded as a violation.
    """
    require_prime(p)
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    if max_n is not None and n > max_n:
        raise DomainError(f"n = {n} exceeds the scan bound {max_n}")

    classes = list(partitions_of(n))
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            flags = list(pool.map(lambda beta: is_p_vanishing_class(n, p, beta), classes))
    else:
        flags = [is_p_vanishing_class(n, p, beta) for beta in classes]

    # with no p-singular character every class vanishes trivially
    vacuous = not any(is_p_singular(alpha, p) for alpha in classes)
    report = ScanReport(n=n, p=p, vacuous=vacuous)
    for beta, vanishing in zip(classes, flags):
        p_adic = is_p_adic_type(beta, p)
        if vanishing:
            report.vanishing.append(VanishingClass(beta=format_partition(beta), p_adic=p_adic))
        elif p_adic:
            report.thm21_violations.append(format_partition(beta))
            logger.error(f"({format_partition(beta)}) is of {p}-adic type but not {p}-vanishing")

    logger.info(
        f"Scan n={n}, p={p}: {len(report.vanishing)} vanishing, "
        f"{len(report.exceptions)} not of p-adic type"
    )
    return report


def first_exception_size(p: int, max_n: int, include_vacuous: bool = False) -> Optional[int]:
    """
    Smallest n <= max_n with a p-vanishing class that is not of p-adic
    type. Sizes where S_n has no p-singular character are skipped unless
    include_vacuous is set.
    """
    for n in range(1, max_n + 1):
        report = scan_p_vanishing(n, p, max_n=None)
        if report.exceptions and (include_vacuous or not report.vacuous):
            return n
    return None
