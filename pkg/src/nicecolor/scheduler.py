"""Presentation scheduling for teams with three-problem portfolios.

The teams are split into groups of three or four, and within each group every
team presents each of its three problems in one of three rounds, no problem
being presented twice in the same group and round.  A group of three distinct
teams always works; a group of four works exactly when no problem lies in all
four portfolios.  Such size-4 groups come from nice partial colorings of the
portfolio triples:

* n % 3 == 0: groups of three, feasible whenever n >= 3;
* n % 3 == 1: one group of four, feasible whenever n >= 4 and the portfolios
  are 1-fair (some portfolio avoids each problem);
* n % 3 == 2: two groups of four, feasible whenever n >= 8 and the portfolios
  are 2-fair and not special.

Within a group, rounds are assigned by 3-edge-coloring the bipartite
team-problem graph (team degree 3, problem degree <= 3) with the classic
alternating-path insertion.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import (
    Coloring,
    Normalization,
    is_c_fair,
    is_special,
    normalize,
    partialize,
)
from .triple2 import color_2_triples


class Infeasible(ValueError):
    """No schedule exists for these portfolios."""


class DegreeExceeded(RuntimeError):
    """A problem occurs in four portfolios of one group; no 3-edge-coloring exists."""


@dataclass(frozen=True)
class Portfolio:
    """A team and its three distinct problems, in input order."""

    team: str
    problems: tuple[str, str, str]

    def __post_init__(self) -> None:
        if len(self.problems) != 3 or len(set(self.problems)) != 3:
            raise ValueError(f"team {self.team!r} needs exactly 3 distinct problems")


@dataclass(frozen=True)
class Feasibility:
    ok: bool
    reason: str

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class GroupBipartite:
    """The team-problem incidence graph of one group."""

    teams: tuple[int, ...]
    problems: tuple[str, ...]
    edges: tuple[tuple[int, str], ...]


@dataclass(frozen=True)
class GroupSchedule:
    """One group's teams plus a team -> problem map for each of three rounds."""

    teams: tuple[str, ...]
    rounds: tuple[dict[str, str], ...]


@dataclass(frozen=True)
class Schedule:
    groups: tuple[GroupSchedule, ...]


def _portfolio_normalization(portfolios: Sequence[Portfolio]) -> Normalization:
    teams = [p.team for p in portfolios]
    if len(set(teams)) != len(teams):
        dup = next(t for t in teams if teams.count(t) > 1)
        raise ValueError(f"duplicate team id {dup!r}")
    return normalize([list(p.problems) for p in portfolios])


def feasible(portfolios: Sequence[Portfolio]) -> Feasibility:
    """Whether a schedule exists, with the failed condition named."""
    n = len(portfolios)
    if n % 3 == 0:
        if n < 3:
            return Feasibility(False, "need at least 3 teams")
        return Feasibility(True, "")
    norm = _portfolio_normalization(portfolios)
    ts = norm.tuple_set
    if n % 3 == 1:
        if n < 4:
            return Feasibility(False, "4 teams are needed to form the group of four")
        if not is_c_fair(ts, 1):
            tok = _overused_problem(norm, 1)
            return Feasibility(False, f"not 1-fair: problem {tok} is in every portfolio")
        return Feasibility(True, "")
    if n < 8:
        return Feasibility(False, "8 teams are needed to form two groups of four")
    if not is_c_fair(ts, 2):
        tok = _overused_problem(norm, 2)
        return Feasibility(
            False, f"not 2-fair: problem {tok} is missing from fewer than 2 portfolios")
    if is_special(ts):
        return Feasibility(False, "portfolios form a special pattern")
    return Feasibility(True, "")


def _overused_problem(norm: Normalization, c: int) -> str:
    ts = norm.tuple_set
    occ = [0] * (ts.m + 1)
    for t in ts.tuples:
        for e in t:
            occ[e] += 1
    for e in range(1, ts.m + 1):
        if occ[e] > ts.n - c:
            return str(norm.id_to_token[e - 1])
    raise AssertionError("no overused problem found")


def build_groups(portfolios: Sequence[Portfolio]) -> tuple[tuple[int, ...], ...]:
    """Partition the team indices into valid groups of three and four.

    Size-4 groups are the color classes of a nice partial coloring of the
    portfolio triples, padded with the lowest-index leftover teams to exactly
    four members; padding keeps every avoidance witness, so no problem covers
    a whole group.  Raises Infeasible when feasible() says no.
    """
    verdict = feasible(portfolios)
    if not verdict:
        raise Infeasible(verdict.reason)
    n = len(portfolios)
    fours: list[list[int]] = []
    if n % 3 != 0:
        ts = _portfolio_normalization(portfolios).tuple_set
        if n % 3 == 1:
            everything = Coloring(1, {i: 0 for i in range(n)})
            partial = partialize(ts, everything)
        else:
            total = color_2_triples(ts)
            partial = partialize(ts, total)
        classes = partial.color_classes()
        spare = iter(i for i in range(n) if i not in partial.assignment)
        for members in classes:
            group = list(members)
            while len(group) < 4:
                group.append(next(spare))
            fours.append(sorted(group))
    used = {i for group in fours for i in group}
    rest = [i for i in range(n) if i not in used]
    groups = [tuple(g) for g in fours]
    for at in range(0, len(rest), 3):
        groups.append(tuple(rest[at:at + 3]))
    return tuple(groups)


def group_bipartite(portfolios: Sequence[Portfolio], group: Iterable[int]) -> GroupBipartite:
    """The incidence graph of one group, edges in (team, input problem) order."""
    teams = tuple(group)
    edges = []
    problems: list[str] = []
    for i in teams:
        for p in portfolios[i].problems:
            edges.append((i, p))
            if p not in problems:
                problems.append(p)
    return GroupBipartite(teams, tuple(problems), tuple(edges))


def konig_edge_color(g: GroupBipartite) -> dict[tuple[int, str], int]:
    """Proper 3-edge-coloring of a group graph; edge -> round in {1, 2, 3}.

    Edges are inserted one by one.  If the team and the problem share a free
    color it is used; otherwise take color a free at the team and color b
    free at the problem, walk the a/b-alternating path starting from the
    problem, and swap its colors.  The walk enters team vertices only along
    their a-edge, so it can never reach the inserted edge's team (which has
    no a-edge), and afterwards both endpoints miss a.  Works whenever every
    vertex has degree at most 3; a problem of degree 4 has no 3-edge-coloring
    and raises DegreeExceeded.
    """
    problem_degree: dict[str, int] = {}
    for _, p in g.edges:
        problem_degree[p] = problem_degree.get(p, 0) + 1
        if problem_degree[p] > 3:
            raise DegreeExceeded(f"problem {p!r} occurs in {problem_degree[p]} portfolios")

    team_slots: dict[int, dict[int, str]] = {t: {} for t in g.teams}
    problem_slots: dict[str, dict[int, int]] = {p: {} for p in g.problems}
    coloring: dict[tuple[int, str], int] = {}
    for team, problem in g.edges:
        free_t = [x for x in range(3) if x not in team_slots[team]]
        free_p = [x for x in range(3) if x not in problem_slots[problem]]
        common = sorted(set(free_t) & set(free_p))
        if common:
            color = common[0]
        else:
            a, b = free_t[0], free_p[0]
            path = []
            vertex: int | str = problem
            on_problem = True
            want = a
            while True:
                slots = problem_slots[vertex] if on_problem else team_slots[vertex]
                nxt = slots.get(want)
                if nxt is None:
                    break
                edge = (nxt, vertex) if on_problem else (vertex, nxt)
                path.append((edge, want))
                vertex = nxt
                on_problem = not on_problem
                want = b if want == a else a
            for (t, p), old in path:
                del team_slots[t][old]
                del problem_slots[p][old]
            for (t, p), old in path:
                new = b if old == a else a
                coloring[(t, p)] = new
                team_slots[t][new] = p
                problem_slots[p][new] = t
            color = a
        coloring[(team, problem)] = color
        team_slots[team][color] = problem
        problem_slots[problem][color] = team
    return {edge: color + 1 for edge, color in coloring.items()}


def make_schedule(portfolios: Sequence[Portfolio]) -> Schedule | None:
    """Groups plus per-round assignments, or None when infeasible."""
    if not feasible(portfolios):
        return None
    group_schedules = []
    for group in build_groups(portfolios):
        bip = group_bipartite(portfolios, group)
        rounds: tuple[dict[str, str], ...] = ({}, {}, {})
        for (team_index, problem), rnd in konig_edge_color(bip).items():
            rounds[rnd - 1][portfolios[team_index].team] = problem
        teams = tuple(portfolios[i].team for i in group)
        group_schedules.append(GroupSchedule(teams, rounds))
    return Schedule(tuple(group_schedules))


def validate_schedule(portfolios: Sequence[Portfolio], schedule: Schedule) -> list[str]:
    """All the ways a schedule is wrong; empty means valid.

    Checks the group partition, group sizes, that each team presents exactly
    its own three problems once each, and that no problem repeats within a
    group and round.
    """
    problems_of = {p.team: set(p.problems) for p in portfolios}
    violations = []
    seen: list[str] = []
    for gi, group in enumerate(schedule.groups, start=1):
        seen.extend(group.teams)
        if len(group.teams) not in (3, 4):
            violations.append(f"group {gi} has {len(group.teams)} teams")
        if len(group.rounds) != 3:
            violations.append(f"group {gi} has {len(group.rounds)} rounds")
        for ri, round_map in enumerate(group.rounds, start=1):
            if set(round_map) != set(group.teams):
                violations.append(f"group {gi} round {ri} does not cover the group")
            presented = list(round_map.values())
            if len(set(presented)) != len(presented):
                violations.append(f"group {gi} round {ri} repeats a problem")
        for team in group.teams:
            given = {rm.get(team) for rm in group.rounds}
            if given != problems_of.get(team, set()):
                violations.append(f"team {team} does not present exactly its portfolio")
    if sorted(seen) != sorted(problems_of):
        violations.append("groups do not partition the teams")
    return violations


def parse_portfolios(text: str) -> list[Portfolio]:
    """Parse the text format: one "team p1 p2 p3" line per team.

    Blank lines and '#' comment lines are ignored.
    """
    portfolios = []
    for line in text.splitlines():
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        fields = stripped.split()
        if len(fields) != 4:
            raise ValueError(f"expected 'team p1 p2 p3', got {stripped!r}")
        portfolios.append(Portfolio(fields[0], (fields[1], fields[2], fields[3])))
    teams = [p.team for p in portfolios]
    if len(set(teams)) != len(teams):
        dup = next(t for t in teams if teams.count(t) > 1)
        raise ValueError(f"duplicate team id {dup!r}")
    return portfolios


def render_schedule_text(schedule: Schedule) -> str:
    lines = []
    for gi, group in enumerate(schedule.groups, start=1):
        lines.append(f"group {gi}: {' '.join(group.teams)}")
        for ri, round_map in enumerate(group.rounds, start=1):
            parts = [f"{team}={round_map[team]}" for team in group.teams]
            lines.append(f"  round {ri}: {' '.join(parts)}")
    return "\n".join(lines) + "\n"


def schedule_to_json(schedule: Schedule) -> str:
    doc = {
        "groups": [
            {"teams": list(g.teams), "rounds": [dict(r) for r in g.rounds]}
            for g in schedule.groups
        ]
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"
