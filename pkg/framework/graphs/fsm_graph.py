from collections import defaultdict

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import networkx as nx

DIGEST_PREFIX = 8


def _gvquote(s):
    return '"{}"'.format(s.replace('"', r'\"'))


def state_name(state):
    return "s" + state.label[:DIGEST_PREFIX]


def merged_edges(fsm):
    """{(source, target): sorted labels}, parallel transitions merged."""
    labels = defaultdict(set)
    for source, event, target in fsm.transitions:
        labels[(source, target)].add(event)
    return {pair: sorted(events) for pair, events in sorted(labels.items())}


def graphviz(fsm):
    """DOT text as an iterable of lines; s0 is drawn as a double circle."""
    yield "digraph fsm {\n"
    yield "  rankdir=LR;\n"
    for state in fsm.states:
        shape = "doublecircle" if state == fsm.s0 else "circle"
        yield f"  {_gvquote(state_name(state))} [shape={shape}];\n"
    for (source, target), events in merged_edges(fsm).items():
        yield (f"  {_gvquote(state_name(source))} -> {_gvquote(state_name(target))}"
               f" [label={_gvquote(','.join(events))}];\n")
    yield "}\n"


def export_dot(fsm):
    return "".join(graphviz(fsm))


class FsmGraph:
    """Renderings of a built model: DOT, GraphML and a PDF picture."""

    def __init__(self, fsm):
        self.fsm = fsm
        self.graph = nx.DiGraph()
        for state in fsm.states:
            self.graph.add_node(state_name(state), initial=state == fsm.s0)
        for (source, target), events in merged_edges(fsm).items():
            self.graph.add_edge(state_name(source), state_name(target), label=",".join(events))

    def save_dot(self, output_file):
        with open(output_file, "w", encoding="utf-8") as f:
            f.writelines(graphviz(self.fsm))

    def save_graphml(self, output_file):
        nx.write_graphml(self.graph, output_file)

    def save_pdf(self, output_file):
        # self-loop labels go under the node name
        drawn = self.graph.copy()
        loops = list(nx.selfloop_edges(drawn, data="label"))
        drawn.remove_edges_from([(u, v) for u, v, _ in loops])
        names = {n: n for n in drawn.nodes}
        for node, _, label in loops:
            names[node] = f"{node}\n({label})"

        plt.figure(figsize=(12, 12))
        pos = nx.spring_layout(drawn, seed=0)
        colors = ['gold' if drawn.nodes[n]["initial"] else 'lightblue' for n in drawn.nodes]
        nx.draw(drawn, pos, labels=names, with_labels=True, node_color=colors,
                node_size=2000, font_size=7, font_weight='bold', arrows=True)
        nx.draw_networkx_edge_labels(drawn, pos, edge_labels=nx.get_edge_attributes(drawn, "label"),
                                     font_size=7)

        plt.title("FSM model", fontsize=16)
        plt.axis('off')
        plt.tight_layout()

        plt.savefig(output_file, format="pdf", dpi=300, bbox_inches='tight')
        plt.close()
