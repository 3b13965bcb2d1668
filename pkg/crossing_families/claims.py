"""Registry of claim verifiers: each recomputes the value a claim states about an instance."""
from dataclasses import dataclass
from typing import Callable, Optional

from crossing_families.constructions import (
    Claim,
    Instance,
    blades_separation_holds,
    edge_crossings_with_cycle,
)
from crossing_families.graphs import (
    count_crossings,
    graphs_cross,
    is_crossing_family,
    is_intersecting_family,
)
from crossing_families.oracles import (
    MatchingMode,
    best_2path_removal,
    enumerate_hamiltonian_max_crossings,
    longest_perfect_matching_bruteforce,
    max_crossing_elbows,
    max_transversal_triangles,
)
from crossing_families.utils.errors import KindMismatchError

Verifier = Callable[[Instance, dict], int]


@dataclass(frozen=True)
class ClaimReport:
    claim: Claim
    computed: int

    @property
    def passed(self) -> bool:
        return self.claim.holds(self.computed)


def _caps(config: dict) -> dict:
    return config.get("caps", {})


def _precision(config: dict) -> dict:
    precision = config.get("precision", {})
    return {key: precision[key] for key in ("start_dps", "max_dps") if key in precision}


def _require_family(instance: Instance):
    if instance.family is None:
        raise KindMismatchError(f"instance {instance.name} has no family")
    return instance.family


def _require_cycle(instance: Instance):
    if instance.cycle is None:
        raise KindMismatchError(f"instance {instance.name} has no cycle")
    return instance.cycle


def verify_crossing_family(instance: Instance, _config: dict) -> int:
    """Family size if it is a crossing family, else 0."""
    family = _require_family(instance)
    return len(family) if is_crossing_family(family) else 0


def verify_intersecting_family(instance: Instance, _config: dict) -> int:
    """Family size if it is an intersecting family, else 0."""
    family = _require_family(instance)
    return len(family) if is_intersecting_family(family) else 0


def verify_cycle_crossings(instance: Instance, _config: dict) -> int:
    return count_crossings(instance.S, _require_cycle(instance))


def verify_distinguished_edge_crossings(instance: Instance, _config: dict) -> int:
    edge = instance.parameters.get("distinguished_edge")
    if edge is None:
        raise KindMismatchError(f"instance {instance.name} has no distinguished edge")
    return edge_crossings_with_cycle(instance.S, _require_cycle(instance), tuple(edge))


def verify_max_crossing_elbows(instance: Instance, config: dict) -> int:
    cap = _caps(config).get("max_clique_graphs")
    kwargs = {"cap": cap} if cap is not None else {}
    return max_crossing_elbows(instance.S, **kwargs).size


def verify_longest_matching_identity(instance: Instance, config: dict) -> int:
    """1 if the certified longest bipartite matching is the family's matching, else 0."""
    family = _require_family(instance)
    result = longest_perfect_matching_bruteforce(
        instance.S, MatchingMode.BIPARTITE_AB, _caps(config), **_precision(config)
    )
    expected = {
        tuple(sorted(instance.S.index(v) for v in member.vertices)) for member in family.members
    }
    return int(set(result.pairs) == expected)


def verify_family_crossing_pairs(instance: Instance, _config: dict) -> int:
    """Number of crossing member pairs."""
    members = _require_family(instance).members
    return sum(
        graphs_cross(g, h) for i, g in enumerate(members) for h in members[i + 1 :]
    )


def verify_hamiltonian_max_crossings(instance: Instance, config: dict) -> int:
    cap = _caps(config).get("max_ham_points")
    kwargs = {"cap": cap} if cap is not None else {}
    return enumerate_hamiltonian_max_crossings(instance.S, **kwargs).value


def verify_max_transversal_triangles(instance: Instance, config: dict) -> int:
    cap = _caps(config).get("max_clique_graphs")
    kwargs = {"cap": cap} if cap is not None else {}
    return max_transversal_triangles(instance.S, **kwargs).size


def verify_blade_separation(instance: Instance, _config: dict) -> int:
    return int(blades_separation_holds(instance.S))


def verify_best_2path_removal(instance: Instance, config: dict) -> int:
    cap = _caps(config).get("max_removal_family")
    kwargs = {"cap": cap} if cap is not None else {}
    return best_2path_removal(_require_family(instance), **kwargs).size


_VERIFIERS = {
    "crossing_family": verify_crossing_family,
    "intersecting_family": verify_intersecting_family,
    "cycle_crossings": verify_cycle_crossings,
    "distinguished_edge_crossings": verify_distinguished_edge_crossings,
    "max_crossing_elbows": verify_max_crossing_elbows,
    "longest_matching_identity": verify_longest_matching_identity,
    "family_crossing_pairs": verify_family_crossing_pairs,
    "hamiltonian_max_crossings": verify_hamiltonian_max_crossings,
    "max_transversal_triangles": verify_max_transversal_triangles,
    "blade_separation": verify_blade_separation,
    "best_2path_removal": verify_best_2path_removal,
}


def verifier_factory(name: str) -> Verifier:
    """Verifier registered under `name`."""
    if name not in _VERIFIERS:
        raise NotImplementedError(f"no verifier named {name!r}")
    return _VERIFIERS[name]


def check_claims(instance: Instance, config: Optional[dict] = None) -> list[ClaimReport]:
    """Recompute every claim of an instance."""
    config = config or {}
    return [
        ClaimReport(claim, verifier_factory(claim.verifier)(instance, config))
        for claim in instance.claims
    ]
