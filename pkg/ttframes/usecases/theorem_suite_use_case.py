from concurrent.futures import ThreadPoolExecutor
from itertools import combinations
from typing import Callable, Iterable, List, Optional, Tuple

from ttframes.entities.exceptions import AssumptionViolated, GenerationFailure, TTFramesError
from ttframes.entities.tensor_entities import TensorSystem
from ttframes.frameworks.logging_config import get_logger, log_execution_time
from ttframes.usecases.dtos import SuiteResponse, TheoremReport
from ttframes.usecases.frames import check_frame_laws, radical_join, zar_frame
from ttframes.usecases.ideals import (
    RadicalMethod,
    check_assumption,
    enumerate_thick_ideals,
    ideal_label,
    radical,
)
from ttframes.usecases.interfaces.framework_interfaces import SystemLoaderInterface
from ttframes.usecases.spectra import (
    corres_bijection,
    principal_coverage,
    verify_corres,
    verify_hdual,
    verify_noncomTN,
)
from ttframes.usecases.supports import (
    check_frame_support,
    check_mediating_uniqueness,
    check_top_support,
    final_map,
    frame_support_corpus,
    gamma,
    mediating_map,
    nvy_support,
    support_isomorphism,
    top_support_corpus,
    top_support_isomorphism,
    triangle_orientation_agreement,
    universal_support,
    xi,
)
from ttframes.usecases.tensor_systems import random_system


logger = get_logger(__name__)


class TheoremSuiteUseCase:
    """Runs the eight theorem checks on a system, or on a range of seeds."""

    CHECK_NAMES = (
        "radical-agreement",
        "frame-laws",
        "coherence",
        "corres",
        "hdual",
        "initiality",
        "finality",
        "noncomTN",
    )

    def __init__(
        self,
        loader: SystemLoaderInterface,
        max_objects: int = 16,
        search_bound: int = 12,
        uniqueness_exhaustive_limit: int = 8,
        strict: bool = False,
        corpus_size: int = 20,
        workers: Optional[int] = None,
    ):
        self.loader = loader
        self.max_objects = max_objects
        self.search_bound = search_bound
        self.uniqueness_exhaustive_limit = uniqueness_exhaustive_limit
        self.strict = strict
        self.corpus_size = corpus_size
        self.workers = workers

    def _checks(self) -> List[Tuple[str, Callable[[TensorSystem], TheoremReport]]]:
        return [
            ("radical-agreement", self._radical_agreement),
            ("frame-laws", self._frame_laws),
            ("coherence", lambda s: principal_coverage(s, self.max_objects)),
            ("corres", lambda s: verify_corres(s, self.max_objects)),
            ("hdual", lambda s: verify_hdual(s, self.max_objects, self.search_bound)),
            ("initiality", self._initiality),
            ("finality", self._finality),
            ("noncomTN", lambda s: verify_noncomTN(s, self.max_objects, self.search_bound)),
        ]

    def verify(self, system: TensorSystem, name: str = "system") -> SuiteResponse:
        """
        Run every theorem check on one system.

        Checks that need every prime to be completely prime are reported as
        SKIPPED when that fails, unless the use case is strict.

        Raises:
            BoundExceeded: the system is too large to enumerate
            AssumptionViolated: strict mode and the gate fails
        """
        enumerate_thick_ideals(system, bound=self.max_objects)
        holds, counterexamples = check_assumption(system)
        if not holds:
            if self.strict:
                raise AssumptionViolated(counterexamples)
            reason = "not completely prime: " + ", ".join(ideal_label(system, p) for p in counterexamples)
            logger.warning(f"{name}: theorem checks skipped, {reason}")

        reports = []
        for check_name, check in self._checks():
            if not holds:
                reports.append(TheoremReport.skipped_report(check_name, reason))
                continue
            try:
                report = check(system)
            except TTFramesError as e:
                report = TheoremReport.error(check_name, f"{type(e).__name__}: {e}")
            logger.debug(f"{name}: {check_name} {report.status.value} ({len(report.checks)} checks)")
            reports.append(report)

        response = SuiteResponse(name, reports)
        logger.info(f"{name}: {response.counts()}")
        return response

    def verify_builtin(self, name: str) -> SuiteResponse:
        return self.verify(self.loader.builtin(name), name)

    def verify_seed(self, seed: int, max_objects: int) -> SuiteResponse:
        name = f"seed:{seed}"
        try:
            system = random_system(seed, max_objects)
        except GenerationFailure as e:
            return SuiteResponse.error(str(e), name)
        return self.verify(system, name)

    @log_execution_time(level="INFO")
    def run_campaign(self, seeds: Iterable[int], max_objects: int) -> List[SuiteResponse]:
        """Verify many seeds concurrently; results come back in seed order."""
        seeds = list(seeds)
        with ThreadPoolExecutor(max_workers=self.workers) as executor:
            responses = list(executor.map(lambda seed: self.verify_seed(seed, max_objects), seeds))
        failed = [r.system_name for r in responses if not r.passed]
        if failed:
            logger.warning(f"campaign: {len(failed)} of {len(seeds)} seed(s) failed: {failed}")
        return responses

    def _radical_agreement(self, system: TensorSystem) -> TheoremReport:
        report = TheoremReport("radical-agreement")
        ideals = enumerate_thick_ideals(system, bound=self.max_objects)
        for ideal in ideals:
            label = ideal_label(system, ideal)
            by_primes = radical(system, ideal, RadicalMethod.VIA_PRIMES)
            by_roots = radical(system, ideal, RadicalMethod.VIA_ROOTS)
            report.add(f"sqrt{label}: primes and roots agree", by_primes == by_roots)
            report.add(f"sqrt{label}: contains the ideal", ideal.issubset(by_primes))
            report.add(f"sqrt{label}: idempotent", radical(system, by_primes) == by_primes)
        for small, large in combinations(ideals, 2):
            if small.issubset(large):
                report.add(
                    f"sqrt is monotone on {ideal_label(system, small)} <= {ideal_label(system, large)}",
                    radical(system, small).issubset(radical(system, large)),
                )
        return report

    def _frame_laws(self, system: TensorSystem) -> TheoremReport:
        frame = zar_frame(system, self.max_objects)
        report = TheoremReport("frame-laws")
        laws = check_frame_laws(frame)
        report.add("lattice, bounds and distributivity", laws.ok, detail=", ".join(laws.axioms()))
        for a in frame.elements:
            for b in frame.elements:
                left, right = frame.payload[a], frame.payload[b]
                meet = frame.payload[frame.meet[a][b]]
                join = frame.payload[frame.join[a][b]]
                report.add(
                    f"{frame.labels[a]} ^ {frame.labels[b]} is the intersection",
                    meet.mask == left.mask & right.mask,
                )
                report.add(
                    f"{frame.labels[a]} v {frame.labels[b]} is the radical of the union",
                    join == radical_join(system, left, right),
                )
        return report

    def _initiality(self, system: TensorSystem) -> TheoremReport:
        report = TheoremReport("initiality")
        corpus = frame_support_corpus(system, self.corpus_size, bound=self.max_objects)
        modes = set()
        one_sided = []
        for i, support in enumerate(corpus):
            axioms = check_frame_support(system, support)
            report.add(f"support {i}: axioms hold", axioms.ok, detail=", ".join(axioms.axioms()))
            u = mediating_map(system, support, self.max_objects)
            s = universal_support(system, self.max_objects)
            factors = all(u.table[s.d[k]] == support.d[k] for k in range(system.size))
            report.add(f"support {i}: u o s = d", factors)
            mode, count = check_mediating_uniqueness(
                system, support, self.uniqueness_exhaustive_limit, self.max_objects
            )
            modes.add(mode)
            report.add(f"support {i}: mediating map is unique ({mode})", count == 1)
            round_trip = gamma(system, xi(system, support))
            report.add(
                f"support {i}: gamma(xi(fs)) is isomorphic to fs",
                support_isomorphism(round_trip, support) is not None,
            )
            if not triangle_orientation_agreement(system, support):
                one_sided.append(i)
        report.data["corpus"] = len(corpus)
        report.data["uniqueness"] = sorted(modes)
        report.data["orientation_mismatches"] = one_sided
        return report

    def _finality(self, system: TensorSystem) -> TheoremReport:
        report = TheoremReport("finality")
        nvy = nvy_support(system)
        axioms = check_top_support(system, nvy)
        report.add("prime-spectrum support satisfies every axiom", axioms.ok, detail=", ".join(axioms.axioms()))
        identity = final_map(system, nvy)
        report.add(
            "final map of the prime-spectrum support is the identity",
            identity.table == tuple(range(nvy.space.size)),
        )

        bijection = corres_bijection(system, self.max_objects)
        from_frame = final_map(system, xi(system, universal_support(system, self.max_objects)))
        report.add(
            "final map of xi(universal) is the corres bijection",
            list(from_frame.table) == [bijection[i] for i in range(len(bijection))],
        )

        corpus = top_support_corpus(system, self.corpus_size, bound=self.max_objects)
        one_sided = []
        for i, support in enumerate(corpus):
            mapped = final_map(system, support)
            report.add(f"top support {i}: pullback of V is sigma", mapped.pullback_holds)
            report.add(f"top support {i}: final map is continuous", mapped.continuous)
            round_trip = xi(system, gamma(system, support))
            report.add(
                f"top support {i}: xi(gamma(ts)) is homeomorphic to ts",
                top_support_isomorphism(round_trip, support, self.search_bound) is not None,
            )
            if not triangle_orientation_agreement(system, support):
                one_sided.append(i)
        report.data["corpus"] = len(corpus)
        # supports satisfying only one triangle orientation; informational
        report.data["orientation_mismatches"] = one_sided
        return report
