"""Build a GraphProfile for a graph: nu values, r3, o(G), class flags.

This is the single place where solvers are invoked on behalf of the
rule engine, keeping rule evaluation itself a pure function of the
profile.
"""

from __future__ import annotations

from typing import Iterable

from . import exact, poly, structure
from .errors import DeficiencyUndefined, NoTwoFactor
from .graph import MultiGraph
from .matching import max_matching, min_odd_two_factor
from .rules import GraphProfile, ProfileFlags


def profile_flags(g: MultiGraph) -> ProfileFlags:
    sf = g.structure_flags()
    has_pm = g.n % 2 == 0 and 2 * len(max_matching(g)) == g.n
    return ProfileFlags(
        connected=sf.connected,
        cubic=sf.cubic,
        bridgeless=sf.bridgeless,
        max_degree=sf.max_degree,
        cycle_rank=sf.cycle_rank,
        is_tree=sf.is_tree,
        is_unicyclic=sf.is_unicyclic,
        claw_free=structure.is_claw_free(g),
        bipartite=structure.is_bipartite(g),
        nearly_bipartite=structure.is_nearly_bipartite(g),
        has_perfect_matching=has_pm,
    )


def compute_profile(
    g: MultiGraph,
    ks: Iterable[int] = (1, 2, 3, 4),
    include_o: bool = True,
    use_poly: bool = True,
) -> GraphProfile:
    """Exact profile with nu_k for every requested k."""
    flags = profile_flags(g)
    nu = {k: exact.nu_k(g, k, use_poly=use_poly).value for k in sorted(set(ks))}
    r3 = g.m - nu[3] if flags.cubic and 3 in nu else None
    oG = None
    if include_o and flags.cubic:
        try:
            oG = min_odd_two_factor(g)
        except NoTwoFactor:
            oG = None
    xk: dict[int, int] = {}
    if flags.is_unicyclic:
        for k in range(1, max(nu, default=1) + 1):
            try:
                xk[k] = poly.cycle_deficiency(g, k).x_k
            except DeficiencyUndefined:
                continue
    return GraphProfile(n=g.n, m=g.m, nu=nu, flags=flags, r3=r3, oG=oG, xk=xk)


def profile_as_dict(p: GraphProfile) -> dict:
    """Flat JSON-friendly view used by reports (nu values keyed nu1..)."""
    out: dict = {"n": p.n, "m": p.m}
    for k in sorted(p.nu):
        out[f"nu{k}"] = p.nu[k]
    if p.r3 is not None:
        out["r3"] = p.r3
    if p.oG is not None:
        out["oG"] = p.oG
    for k in sorted(p.xk):
        out[f"x{k}"] = p.xk[k]
    out["flags"] = {
        name: getattr(p.flags, name) for name in p.flags.__dataclass_fields__
    }
    return out


def profile_from_dict(d: dict) -> GraphProfile:
    """Inverse of profile_as_dict (accepts string-serialized integers)."""

    def num(x):
        return int(x)

    nu = {
        int(key[2:]): num(val)
        for key, val in d.items()
        if key.startswith("nu") and key[2:].isdigit()
    }
    xk = {
        int(key[1:]): num(val)
        for key, val in d.items()
        if key.startswith("x") and key[1:].isdigit()
    }
    raw_flags = d.get("flags", {})
    flags = ProfileFlags(
        **{
            name: (
                bool(raw_flags.get(name, False))
                if name != "max_degree" and name != "cycle_rank"
                else num(raw_flags.get(name, 0))
            )
            for name in ProfileFlags.__dataclass_fields__
        }
    )
    return GraphProfile(
        n=num(d["n"]),
        m=num(d["m"]),
        nu=nu,
        flags=flags,
        r3=num(d["r3"]) if "r3" in d else None,
        oG=num(d["oG"]) if "oG" in d else None,
        xk=xk,
    )
