import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Tuple

import networkx as nx

from appspec.ast_nodes import Assign, Disable, Enable, If, iter_statements, variables_read

Pair = Tuple[str, str]


@dataclass(frozen=True)
class HandlerFacts:
    reads: Dict[str, FrozenSet[str]]
    writes: Dict[str, FrozenSet[str]]
    ctrlreads: Dict[str, FrozenSet[str]]
    regs: Dict[str, FrozenSet[str]]


def handler_facts(spec):
    reads, writes, ctrlreads, regs = {}, {}, {}, {}
    for decl in spec.events:
        r, w, c, g = set(), set(), set(), set()
        for stmt in iter_statements(decl.body):
            if isinstance(stmt, Assign):
                w.add(stmt.var)
                r |= variables_read(stmt.expr)
            elif isinstance(stmt, If):
                used = variables_read(stmt.cond)
                r |= used
                c |= used
            elif isinstance(stmt, (Enable, Disable)):
                g.add(stmt.event)
        reads[decl.name] = frozenset(r)
        writes[decl.name] = frozenset(w)
        ctrlreads[decl.name] = frozenset(c)
        regs[decl.name] = frozenset(g)
    return HandlerFacts(reads=reads, writes=writes, ctrlreads=ctrlreads, regs=regs)


@dataclass(frozen=True)
class DependencyRelation:
    """
    Event dependency. (e1, e2) in `dep` reads "e2 depends on e1": e1 reaches
    e2 through data/control flow (reflexive-transitive), or e1 enables or
    disables e2.
    """
    events: Tuple[str, ...]
    facts: HandlerFacts
    rc: FrozenSet[Pair]
    rd: FrozenSet[Pair]
    closure: FrozenSet[Pair]
    dep: FrozenSet[Pair]

    def depends(self, e1, e2):
        return (e1, e2) in self.dep

    def independent(self, e1, e2):
        return (e1, e2) not in self.dep and (e2, e1) not in self.dep

    @property
    def indep(self):
        return frozenset((a, b) for a in self.events for b in self.events if self.independent(a, b))

    def edge_lines(self, reflexive=False):
        """Sorted `e1 -> e2` lines; self-pairs only when `reflexive` is set."""
        return [f"{a} -> {b}" for a, b in sorted(self.dep) if reflexive or a != b]


def analyze(spec):
    facts = handler_facts(spec)
    events = spec.event_names
    rd = frozenset((a, b) for a in events for b in events if facts.writes[a] & facts.reads[b])
    rc = frozenset((a, b) for a in events for b in events if facts.writes[a] & facts.ctrlreads[b])

    flow = nx.DiGraph()
    flow.add_nodes_from(events)
    flow.add_edges_from(rc | rd)
    closure = frozenset(nx.transitive_closure(flow, reflexive=True).edges())

    registration = {(a, b) for a in events for b in facts.regs[a]}
    dep = closure | registration

    logging.info(f"Dependency analysis of {spec.name}: {len(events)} events, {len(dep)} dependent pairs")
    return DependencyRelation(events=events, facts=facts, rc=rc, rd=rd, closure=closure, dep=frozenset(dep))
