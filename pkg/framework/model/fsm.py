import networkx as nx


class Fsm:
    """
    Nondeterministic state machine (S, I, delta, s0). States are
    AbstractStates; delta is stored as a MultiDiGraph keyed by event, so a
    transition (s, e, s') is present at most once while (s, e, s'') may
    coexist with it.
    """

    def __init__(self, s0):
        self.s0 = s0
        self.graph = nx.MultiDiGraph()
        self.graph.add_node(s0)
        self.events = set()

    @classmethod
    def from_transitions(cls, s0, transitions):
        fsm = cls(s0)
        for source, event, target in transitions:
            fsm.add_transition(source, event, target)
        return fsm

    def add_state(self, state):
        self.graph.add_node(state)

    def add_transition(self, source, event, target):
        if not self.graph.has_edge(source, target, key=event):
            self.graph.add_edge(source, target, key=event)
        self.events.add(event)

    def freeze(self):
        nx.freeze(self.graph)
        self.events = frozenset(self.events)
        return self

    @property
    def states(self):
        return sorted(self.graph.nodes)

    @property
    def transitions(self):
        return sorted((source, event, target) for source, target, event in self.graph.edges(keys=True))

    @property
    def num_states(self):
        return self.graph.number_of_nodes()

    @property
    def num_transitions(self):
        return self.graph.number_of_edges()

    def supp(self, state):
        """Sorted (event, successor) pairs leaving `state`."""
        if state not in self.graph:
            return []
        return sorted((event, target) for _, target, event in self.graph.out_edges(state, keys=True))

    def successors(self, state, event):
        return [target for e, target in self.supp(state) if e == event]

    def is_run(self, events):
        """True when `events` labels some path from s0."""
        frontier = {self.s0}
        for event in events:
            frontier = {target for state in frontier for target in self.successors(state, event)}
            if not frontier:
                return False
        return True
