"""
Axiom Service
Composition entry point and the exhaustive checker for the unit, associativity and interchange laws
"""
import logging
from collections import defaultdict
from typing import Dict, Iterable, Optional, Sequence, Tuple

from ..constants import (
    LAW_ASSOCIATIVITY, LAW_INPUT_INTERCHANGE, LAW_LEFT_UNIT, LAW_OUTPUT_INTERCHANGE, LAW_RIGHT_UNIT, LAWS,
)
from ..exceptions import PolycatError
from ..models.monoid_polycategory import MonoidPolycategory
from ..models.polycategory import CompositionRequest, FinPolycategory, PolyMap
from .dto import AxiomReport, LawCounterexample

_logger = logging.getLogger(__name__)


def compose(P: FinPolycategory, req: CompositionRequest) -> PolyMap:
    """
    Compose within P, checking that both polymaps belong to it

    Raises:
        PlanarityViolation, TypeMismatch, IndexOutOfRange: rejected cut
        OutOfBound: table composite exceeds the bound
    """
    for f in (req.f, req.g):
        if not P.contains(f):
            raise PolycatError(f"{f} is not a polymap of {P.name}")
    return P.compose(req.f, req.i, req.g, req.j)


class CompositionCache:
    """Memoized try_compose over one polycategory"""

    def __init__(self, P: FinPolycategory):
        self.P = P
        self._cache: Dict[Tuple[PolyMap, int, PolyMap, int], Optional[PolyMap]] = {}

    def __call__(self, f: PolyMap, i: int, g: PolyMap, j: int) -> Optional[PolyMap]:
        key = (f, i, g, j)
        if key not in self._cache:
            self._cache[key] = self.P.try_compose(f, i, g, j)
        return self._cache[key]


class LawChecker:
    """Enumerates every in-bound law instance of a polycategory"""

    def __init__(self, P: FinPolycategory, maps: Optional[Sequence[PolyMap]] = None):
        self.P = P
        self.maps = list(maps) if maps is not None else list(P.polymaps())
        self.comp = CompositionCache(P)
        self.by_input = defaultdict(list)
        self.by_output = defaultdict(list)
        for f in self.maps:
            for j, obj in enumerate(f.domain):
                self.by_input[obj].append((f, j))
            for i, obj in enumerate(f.codomain):
                self.by_output[obj].append((f, i))

    def run(self, laws: Iterable[str] = LAWS) -> AxiomReport:
        report = AxiomReport(self.P.name, self.P.arity_bound, self.P.bound_relative)
        handlers = {
            LAW_LEFT_UNIT: self._left_unit,
            LAW_RIGHT_UNIT: self._right_unit,
            LAW_ASSOCIATIVITY: self._associativity,
            LAW_INPUT_INTERCHANGE: self._input_interchange,
            LAW_OUTPUT_INTERCHANGE: self._output_interchange,
        }
        for law in laws:
            handlers[law](report)
        report.counterexamples.sort(key=lambda c: (LAWS.index(c.law), c.polymaps, c.positions))
        return report

    def _record(self, report, law, maps, positions, left, right):
        report.instances[law] += 1
        if left != right:
            report.counterexamples.append(LawCounterexample(
                law, tuple(str(f) for f in maps), tuple(positions), str(left), str(right)))

    def _left_unit(self, report):
        for f in self.maps:
            for i, obj in enumerate(f.codomain):
                result = self.comp(f, i, self.P.identity(obj), 0)
                if result is not None:
                    self._record(report, LAW_LEFT_UNIT, (f,), (i, 0), result, f)

    def _right_unit(self, report):
        for g in self.maps:
            for j, obj in enumerate(g.domain):
                result = self.comp(self.P.identity(obj), 0, g, j)
                if result is not None:
                    self._record(report, LAW_RIGHT_UNIT, (g,), (0, j), result, g)

    def _associativity(self, report):
        comp = self.comp
        for f in self.maps:
            for i, obj in enumerate(f.codomain):
                for g, j in self.by_input[obj]:
                    fg = comp(f, i, g, j)
                    if fg is None:
                        continue
                    for k, mid in enumerate(g.codomain):
                        for h, l in self.by_input[mid]:
                            gh = comp(g, k, h, l)
                            if gh is None:
                                continue
                            left = comp(f, i, gh, l + j)
                            right = comp(fg, i + k, h, l)
                            if left is None or right is None or left.boundary != right.boundary:
                                continue
                            self._record(report, LAW_ASSOCIATIVITY, (f, g, h), (i, j, k, l), left, right)

    def _input_interchange(self, report):
        comp = self.comp
        for h in self.maps:
            for l1 in range(len(h.domain)):
                for l2 in range(l1 + 1, len(h.domain)):
                    for f, i in self.by_output[h.domain[l1]]:
                        hf = comp(f, i, h, l1)
                        if hf is None:
                            continue
                        for g, k in self.by_output[h.domain[l2]]:
                            hg = comp(g, k, h, l2)
                            if hg is None:
                                continue
                            left = comp(f, i, hg, l1)
                            right = comp(g, k, hf, l2 - 1 + len(f.domain))
                            if left is None or right is None or left.boundary != right.boundary:
                                continue
                            self._record(report, LAW_INPUT_INTERCHANGE, (f, g, h), (i, k, l1, l2), left, right)

    def _output_interchange(self, report):
        comp = self.comp
        for f in self.maps:
            for i1 in range(len(f.codomain)):
                for i2 in range(i1 + 1, len(f.codomain)):
                    for g, j in self.by_input[f.codomain[i1]]:
                        fg = comp(f, i1, g, j)
                        if fg is None:
                            continue
                        for h, l in self.by_input[f.codomain[i2]]:
                            fh = comp(f, i2, h, l)
                            if fh is None:
                                continue
                            left = comp(fg, i2 - 1 + len(g.codomain), h, l)
                            right = comp(fh, i1, g, j)
                            if left is None or right is None or left.boundary != right.boundary:
                                continue
                            self._record(report, LAW_OUTPUT_INTERCHANGE, (f, g, h), (i1, i2, j, l), left, right)


def _check_monoid_axioms(P: MonoidPolycategory) -> AxiomReport:
    """Each law reduces to one identity of the monoid, checked over all of M"""
    report = AxiomReport(P.name, P.arity_bound, P.bound_relative)
    monoid = P.monoid
    elements = monoid.carrier
    e = monoid.unit
    for a in elements:
        report.instances[LAW_LEFT_UNIT] += 1
        if monoid.mult(e, a) != a:
            report.counterexamples.append(LawCounterexample(LAW_LEFT_UNIT, (a,), (0, 0), monoid.mult(e, a), a))
        report.instances[LAW_RIGHT_UNIT] += 1
        if monoid.mult(a, e) != a:
            report.counterexamples.append(LawCounterexample(LAW_RIGHT_UNIT, (a,), (0, 0), monoid.mult(a, e), a))
    for f in elements:
        for g in elements:
            for h in elements:
                checks = (
                    (LAW_ASSOCIATIVITY, monoid.mult(monoid.mult(h, g), f), monoid.mult(h, monoid.mult(g, f))),
                    (LAW_INPUT_INTERCHANGE, monoid.mult(monoid.mult(h, g), f), monoid.mult(monoid.mult(h, f), g)),
                    (LAW_OUTPUT_INTERCHANGE, monoid.mult(h, monoid.mult(g, f)), monoid.mult(g, monoid.mult(h, f))),
                )
                for law, left, right in checks:
                    report.instances[law] += 1
                    if left != right:
                        report.counterexamples.append(LawCounterexample(law, (f, g, h), (), left, right))
    report.counterexamples.sort(key=lambda c: (LAWS.index(c.law), c.polymaps, c.positions))
    return report


def check_axioms(P: FinPolycategory, exhaustive: bool = False, laws: Iterable[str] = LAWS) -> AxiomReport:
    """
    Verify the five laws over every in-bound instantiation

    Args:
        P: Polycategory to check
        exhaustive: Enumerate instances even for monoid presentations
        laws: Subset of laws to check

    Returns:
        AxiomReport listing instance counts and every counterexample
    """
    if isinstance(P, MonoidPolycategory) and not exhaustive:
        report = _check_monoid_axioms(P)
    else:
        report = LawChecker(P).run(laws)
    total = sum(report.instances.values())
    if report.passed:
        _logger.info(f"Axioms hold on {P.name}: {total} instances")
    else:
        _logger.info(f"Axioms fail on {P.name}: {len(report.counterexamples)} counterexamples "
                     f"({', '.join(report.failing_laws())})")
    return report
