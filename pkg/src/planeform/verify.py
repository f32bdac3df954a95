"""Machine check of the plane structure for every partition of a given n.

For each n the check confirms that

* there is one plane per partition, of dimension equal to its number of addends;
* every pair of planes is separated by a position forced to differ;
* over a small eigenvalue pool, every plane matrix survives the round trip
  roots -> plane matrix -> Jordan form -> canonical representative, lies in
  exactly one plane, and has the same Weyr array by rank counting as by the
  multiplicity formula.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement, product

from .arith import I, RootMultiset, exact
from .errors import PlaneFormError
from .jordan import aff, jordan_of_plane, weyr_of_general, weyr_of_plane
from .partition import EigenAssignment, Partition, enumerate_partitions
from .plane import disjoint_witness, inverse_image, memberships, plane_descriptor, plane_matrix_from_roots

VERIFY_POOL = (exact(0), exact(1), exact(2), exact(-1), I)


@dataclass
class VerifyReport:
    n: int
    partition_count: int = 0
    plane_count: int = 0
    dimension_checks: list = field(default_factory=list)  # (partition, expected d, passed)
    disjoint_pairs: int = 0
    witnesses: dict = field(default_factory=dict)  # (pi, other) -> 0-based position
    round_trip_count: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        dims_ok = sum(1 for _, _, passed in self.dimension_checks if passed)
        pairs = self.partition_count * (self.partition_count - 1) // 2
        lines = [
            f"n = {self.n}",
            f"partitions: {self.partition_count}",
            f"planes: {self.plane_count}",
            f"dimension checks passed: {dims_ok}/{len(self.dimension_checks)}",
            f"disjoint pairs with witness: {self.disjoint_pairs}/{pairs}",
            f"round trips passed: {self.round_trip_count}",
            f"failures: {len(self.failures)}",
        ]
        lines += [f"  FAIL {msg}" for msg in self.failures]
        return "\n".join(lines)


def pool_assignments(pi: Partition, pool=VERIFY_POOL):
    """Every choice of stack root multisets drawn from ``pool``."""
    lengths = plane_descriptor(pi).stacks.l
    per_stack = [list(combinations_with_replacement(pool, l)) for l in lengths]
    for choice in product(*per_stack):
        yield EigenAssignment(tuple(RootMultiset.from_values(c) for c in choice))


def check_round_trip(pi: Partition, assignment: EigenAssignment) -> str | None:
    """None on success, otherwise a one-line description of what broke."""
    a = plane_matrix_from_roots(pi, assignment)
    label = f"{pi} roots {[str(r) for r in assignment.per_stack]}"
    if inverse_image(a) != assignment:
        return f"{label}: stack roots not recovered"
    found = [p.partition for p in memberships(a.matrix)]
    if found != [pi]:
        return f"{label}: lies in planes {[str(p) for p in found]}"
    j = jordan_of_plane(a)
    if aff(j.materialize(), eigenvalues=j) != a:
        return f"{label}: canonical representative of {j} differs"
    if weyr_of_general(a.matrix, eigenvalues=j) != weyr_of_plane(a):
        return f"{label}: rank-based Weyr array differs"
    return None


def run_verify(n: int, round_trips: bool = True, pool=VERIFY_POOL) -> VerifyReport:
    parts = enumerate_partitions(n)
    report = VerifyReport(n, partition_count=len(parts))
    descs = {}
    for pi in parts:
        try:
            descs[pi] = plane_descriptor(pi)
        except PlaneFormError as exc:
            report.failures.append(f"{pi}: {type(exc).__name__}: {exc}")
    report.plane_count = len(descs)
    if report.plane_count != report.partition_count:
        report.failures.append(f"{report.plane_count} planes for {report.partition_count} partitions")
    for pi, desc in descs.items():
        passed = desc.dim == pi.d
        report.dimension_checks.append((pi, pi.d, passed))
        if not passed:
            report.failures.append(f"{pi}: plane dimension {desc.dim}, expected {pi.d}")
    for pi, other in combinations(parts, 2):
        try:
            report.witnesses[(pi, other)] = disjoint_witness(pi, other)
            report.disjoint_pairs += 1
        except PlaneFormError as exc:
            report.failures.append(f"{pi} vs {other}: {exc}")
    if round_trips:
        for pi in parts:
            for assignment in pool_assignments(pi, pool):
                try:
                    problem = check_round_trip(pi, assignment)
                except PlaneFormError as exc:
                    problem = f"{pi}: {type(exc).__name__}: {exc}"
                if problem:
                    report.failures.append(problem)
                else:
                    report.round_trip_count += 1
    return report


__all__ = ["VERIFY_POOL", "VerifyReport", "check_round_trip", "pool_assignments", "run_verify"]
