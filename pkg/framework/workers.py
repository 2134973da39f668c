import logging
import multiprocessing

from tqdm import tqdm

from campaign.execution import execute_sequence
from engine.session import init_session
from utils.logging_utils import setup_logging
from utils.rng import EXECUTION_STREAM, derive_seed

_worker_spec = None


def worker_init(spec, log_folder=None):
    global _worker_spec
    _worker_spec = spec
    if log_folder:
        setup_logging(log_folder)
    else:
        logging.disable(logging.CRITICAL)


def execute_indexed(args):
    """Run sequence `index` on its own session seeded from (seed, index)."""
    spec, seed, index, seq = args
    if spec is None:
        spec = _worker_spec
    session = init_session(spec, derive_seed(seed, EXECUTION_STREAM, index))
    return execute_sequence(session, seq, index=index)


def execute_sequences(spec, sequences, seed, jobs=1, should_stop=None, progress=False, log_folder=None):
    """
    Execute every sequence on a fresh session. Returns (stats sorted by
    sequence index, partial) where `partial` is set when `should_stop`
    fired before all sequences ran. The budget is only checked between
    sequences.
    """
    results = []
    partial = False
    total = len(sequences)
    bar = tqdm(total=total, desc=f"Executing {spec.name}", unit="seq", leave=False, disable=not progress)

    if jobs <= 1:
        for index, seq in enumerate(sequences):
            if should_stop is not None and should_stop():
                partial = True
                break
            results.append(execute_indexed((spec, seed, index, seq)))
            bar.update(1)
    else:
        logging.info(f"Executing {total} sequences on {jobs} processes")
        args_list = [(None, seed, index, seq) for index, seq in enumerate(sequences)]
        with multiprocessing.Pool(processes=jobs, initializer=worker_init, initargs=(spec, log_folder)) as pool:
            for stats in pool.imap(execute_indexed, args_list):
                results.append(stats)
                bar.update(1)
                if should_stop is not None and should_stop() and len(results) < total:
                    partial = True
                    pool.terminate()
                    break
    bar.close()

    if partial:
        logging.warning(f"Execution stopped by budget after {len(results)} of {total} sequences")
    results.sort(key=lambda stats: stats.index)
    return results, partial
