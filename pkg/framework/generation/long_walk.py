import logging

from generation.sequences import EmptyModelError, EventSeq, SequenceBatch


def gen_long(fsm, d, m, rng, should_stop=None):
    """
    Long event sequence generation: m random walks of length d from s0,
    each step drawn uniformly from supp(current). A walk that reaches a
    state without successors is kept truncated and still counts toward m.
    No partial-order pruning happens here.
    """
    if d < 1 or m < 1:
        raise ValueError("d and m must be positive")
    if not fsm.supp(fsm.s0):
        raise EmptyModelError("the initial state has no outgoing transitions")

    batch = SequenceBatch()
    for index in range(m):
        if should_stop is not None and should_stop():
            batch.partial = True
            logging.warning(f"Generation stopped by budget after {index} of {m} walks")
            break
        state = fsm.s0
        events = []
        while len(events) < d:
            pairs = fsm.supp(state)
            if not pairs:
                batch.truncated += 1
                logging.warning(f"Walk {index} truncated at length {len(events)}: dead end in the model")
                break
            event, state = pairs[int(rng.integers(len(pairs)))]
            events.append(event)
        batch.walks.append(EventSeq(tuple(events), origin="long"))

    logging.info(f"Generated {len(batch.walks)} walks ({batch.duplicates} duplicates, {batch.truncated} truncated)")
    return batch
