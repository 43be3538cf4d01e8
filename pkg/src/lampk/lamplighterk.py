"""K-group reports for the lamplighter crossed product, and the trace.

Both sides of the assembly correspondence are free abelian on the same
canonical-word basis (truncated here at a word length), with the analytic
K_1 infinite cyclic on the shift unitary class and the boundary identity
sending it to minus the class of the unit.  The trace of a basis word is
the product of its entry dimensions over |F| to the support size, an exact
rational; levelwise these traces generate exactly 1/|F|^n of the integers.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import gcd

from . import zchain
from .errors import LampkError
from .grouprep import GroupRepData
from .sampling import random_chain, window_range
from .shiftwords import EMPTY_WORD, Word, canonicalize, enumerate_canonical
from .zchain import ZChain

TOPOLOGICAL = "topological"
ANALYTIC = "analytic"

BOUNDARY_IDENTITY = "∂1[u] = -[1]"


@dataclass(frozen=True)
class KGroupReport:
    """One side of the correspondence, truncated at max_len."""

    side: str
    k0_basis: tuple[Word, ...]
    k1_generator: str
    k1_group: str = "Z"
    boundary: str = BOUNDARY_IDENTITY


@dataclass(frozen=True)
class AssemblyCorrespondence:
    topological: KGroupReport
    analytic: KGroupReport
    pairs: tuple[tuple[Word, Word], ...]


def k_groups(group: GroupRepData, max_len: int) -> AssemblyCorrespondence:
    """Both K-group reports plus the basis bijection between them.

    The bijection is the identity on the canonical-word index set: the
    word maps to the class of the elementary projection tensor over its
    support.  K_1 is infinite cyclic on both sides; we fix the convention
    that the shift unitary class maps to the positive generator.
    """
    basis = tuple(enumerate_canonical(group, max_len))
    topological = KGroupReport(
        side=TOPOLOGICAL, k0_basis=basis, k1_generator="i_*(t)"
    )
    analytic = KGroupReport(side=ANALYTIC, k0_basis=basis, k1_generator="[u]")
    pairs = tuple((w, w) for w in basis)
    return AssemblyCorrespondence(
        topological=topological, analytic=analytic, pairs=pairs
    )


def trace_of_word(group: GroupRepData, word: Word) -> Fraction:
    """Trace of the minimal-projection class of a word, as a reduced fraction.

    Product of the entry dimensions over |F| raised to the support size;
    the empty word is the class of the unit, trace 1.
    """
    numerator = 1
    for _, idx in word.entries:
        if idx >= group.num_irreps:
            raise LampkError(
                f"word entry {idx} out of range for {group.name} "
                f"({group.num_irreps} irreps)"
            )
        numerator *= group.dims[idx]
    return Fraction(numerator, group.order ** len(word.entries))


def trace_of_chain(group: GroupRepData, chain: ZChain) -> Fraction:
    """Z-linear extension of trace_of_word."""
    total = Fraction(0)
    for word, coeff in chain.items():
        total += coeff * trace_of_word(group, word)
    return total


def trace_image_level(group: GroupRepData, n: int) -> Fraction:
    """Positive generator of the trace values on words supported in [0, n).

    The subgroup of the rationals these traces generate is cyclic; its
    positive generator is 1 for n = 0 and 1/|F|^n for n >= 1.  Computed
    directly as a gcd over all words in the window, not assumed.
    """
    if n < 0:
        raise LampkError(f"level must be >= 0, got {n}")
    denominator = group.order**n
    numerator_gcd = 0
    r = group.num_irreps
    for vec in product(range(r), repeat=n):
        word = Word((i, v) for i, v in enumerate(vec) if v)
        t = trace_of_word(group, word)
        numerator_gcd = gcd(
            numerator_gcd, t.numerator * (denominator // t.denominator)
        )
    return Fraction(numerator_gcd, denominator)


@dataclass
class PVReport:
    """Outcome of the kernel/cokernel property checks on random chains.

    Counterexample lists must stay empty: the shift fixes exactly the
    multiples of the empty word, the canonical projection kills exactly
    the chains of the form m - alpha(m), and the splitting identity holds
    term-exactly for every sampled chain.
    """

    group: str
    samples: int
    window: int
    seed: int
    invariant_mismatches: list = field(default_factory=list)
    nonvanishing_coboundaries: list = field(default_factory=list)
    moved_canonicals: list = field(default_factory=list)
    identity_failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not (
            self.invariant_mismatches
            or self.nonvanishing_coboundaries
            or self.moved_canonicals
            or self.identity_failures
        )

    def counterexample_count(self) -> int:
        return (
            len(self.invariant_mismatches)
            + len(self.nonvanishing_coboundaries)
            + len(self.moved_canonicals)
            + len(self.identity_failures)
        )


def pv_check(
    group: GroupRepData, samples: int, window: int, seed: int
) -> PVReport:
    """Property-test the kernel/cokernel bookkeeping on seeded random chains."""
    rng = random.Random(seed)
    positions = window_range(window)
    report = PVReport(
        group=group.name, samples=samples, window=window, seed=seed
    )
    for _ in range(samples):
        chain = random_chain(rng, group, positions)

        # Kernel: invariance happens exactly on multiples of the empty word.
        expected_invariant = all(w.is_empty for w in chain)
        computed = zchain.alpha(chain) == chain
        if computed != expected_invariant or zchain.is_invariant(chain) != computed:
            report.invariant_mismatches.append(chain)
        constant = ZChain.of(EMPTY_WORD, rng.randint(-9, 9))
        if not zchain.is_invariant(constant):
            report.invariant_mismatches.append(constant)

        # Cokernel: coboundaries die, and adding one changes no class.
        m = random_chain(rng, group, positions)
        coboundary = m - zchain.alpha(m)
        if zchain.coinvariant_class(coboundary):
            report.nonvanishing_coboundaries.append(m)
        if zchain.coinvariant_class(chain + coboundary) != zchain.coinvariant_class(chain):
            report.nonvanishing_coboundaries.append((chain, m))

        # Section: canonical words are fixed by the class map.
        rep, _ = canonicalize(next(iter(m), EMPTY_WORD))
        if zchain.coinvariant_class(ZChain.of(rep)) != ZChain.of(rep):
            report.moved_canonicals.append(rep)

        # Exact splitting identity.
        witness, canonical = zchain.decompose(chain)
        if (witness - zchain.alpha(witness)) + canonical != chain:
            report.identity_failures.append(chain)
        if witness.coeff(EMPTY_WORD) != 0:
            report.identity_failures.append(chain)
    return report
