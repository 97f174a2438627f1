"""Orbit decomposition of a census under the two shearing twists.

The horizontal twist sends (alpha, beta) to (alpha, alpha beta), the
vertical one to (beta alpha, beta); together they generate the full
integer shearing action on a census.  Orbits are the irreducible
families of covers; each gets exact per-orbit counts, weight, slope
and classification flags.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .census import Census
from .involutions import is_hyperelliptic
from .perm import compose
from .spin import spin_parity
from .surface import Origami, StratumSignature, canonical_key, make_origami


class OrbitClosureError(RuntimeError):
    """A twist image fell outside the census (indicates a census bug)."""


@dataclass(frozen=True)
class ComponentSummary:
    """One orbit: exact counts, slope and classification labels."""

    component_id: int
    member_keys: tuple[bytes, ...]
    n_classes: int
    total_weight: Fraction
    slope: Fraction
    hyperelliptic: bool
    parity: int | None
    cusps: tuple[tuple[int, tuple[int, ...]], ...]

    @property
    def cusp_count(self) -> int:
        return len(self.cusps)


def act_h_alpha(o: Origami) -> Origami:
    """Horizontal twist: (alpha, beta) -> (alpha, alpha beta)."""
    image = make_origami(o.alpha, compose(o.alpha, o.beta))
    assert image.commutator_type == o.commutator_type
    return image


def act_h_beta(o: Origami) -> Origami:
    """Vertical twist: (alpha, beta) -> (beta alpha, beta)."""
    image = make_origami(compose(o.beta, o.alpha), o.beta)
    assert image.commutator_type == o.commutator_type
    return image


def act_h_alpha_inverse(o: Origami) -> Origami:
    return make_origami(o.alpha, compose(o.alpha.inverse(), o.beta))


def act_h_beta_inverse(o: Origami) -> Origami:
    return make_origami(compose(o.beta.inverse(), o.alpha), o.beta)


def component_slope(
    n_classes: int, total_weight: Fraction, stratum: StratumSignature
) -> Fraction:
    """Exact slope 12 / (1 + kappa N / M)."""
    if total_weight <= 0:
        raise ValueError("slope undefined: total weight must be positive")
    return 12 / (1 + stratum.kappa * n_classes / total_weight)


def decompose(census: Census) -> list[ComponentSummary]:
    """Split a census into twist orbits, ordered by least member key.

    The hyperelliptic flag (and spin parity, on even strata) is
    computed for every member and checked to be constant per orbit.
    """
    twists = (act_h_alpha, act_h_beta, act_h_alpha_inverse, act_h_beta_inverse)
    unvisited = dict(census.members)
    components = []
    for start_key in census.keys():
        if start_key not in unvisited:
            continue
        orbit_keys = [start_key]
        del unvisited[start_key]
        frontier = [census.members[start_key]]
        while frontier:
            o = frontier.pop()
            for twist in twists:
                image = twist(o)
                key = canonical_key(image.alpha, image.beta)
                if key in unvisited:
                    orbit_keys.append(key)
                    frontier.append(unvisited.pop(key))
                elif key not in census.members:
                    raise OrbitClosureError(
                        "twist image left the census; enumeration is "
                        "incomplete or inconsistent"
                    )
        components.append(sorted(orbit_keys))
    components.sort(key=lambda keys: keys[0])

    out = []
    for cid, keys in enumerate(components, start=1):
        members = [census.members[k] for k in keys]
        weight = sum((o.weight for o in members), Fraction(0))
        flags = {is_hyperelliptic(o) for o in members}
        assert len(flags) == 1, "hyperelliptic flag must be orbit-constant"
        parity: int | None = None
        if census.stratum.all_even():
            parities = {spin_parity(o) for o in members}
            assert len(parities) == 1, "spin parity must be orbit-constant"
            parity = parities.pop()
        out.append(
            ComponentSummary(
                component_id=cid,
                member_keys=tuple(keys),
                n_classes=len(keys),
                total_weight=weight,
                slope=component_slope(len(keys), weight, census.stratum),
                hyperelliptic=flags.pop(),
                parity=parity,
                cusps=cusp_data(keys, census),
            )
        )
    assert sum(c.n_classes for c in out) == census.n_classes
    assert sum(
        (c.total_weight for c in out), Fraction(0)
    ) == census.total_weight
    return out


def cusp_data(
    component_keys, census: Census
) -> tuple[tuple[int, tuple[int, ...]], ...]:
    """Orbits of the horizontal twist alone within one component.

    Each such orbit is one cusp; the cycle type of alpha is constant
    along it (the twist fixes alpha) and is reported per cusp.
    """
    remaining = set(component_keys)
    cusps = []
    for key in sorted(component_keys):
        if key not in remaining:
            continue
        orbit_size = 0
        alpha_parts = census.members[key].alpha.cycle_type().parts
        cur = census.members[key]
        cur_key = key
        while cur_key in remaining:
            remaining.remove(cur_key)
            orbit_size += 1
            assert cur.alpha.cycle_type().parts == alpha_parts
            cur = act_h_alpha(cur)
            cur_key = canonical_key(cur.alpha, cur.beta)
        cusps.append((orbit_size, alpha_parts))
    return tuple(cusps)
