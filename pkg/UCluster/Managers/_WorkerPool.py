__copyright__ = "(C) 2019-2021 Science and Technology Facilities Council"
__license__ = "BSD - see LICENSE file in top-level directory"
__authors__ = "Neil Massey"

"""A small pool of workers for running independent guesses (clique sizes,
subsets of a deletion set, benchmark instances) in parallel.

With one worker everything runs in the calling thread, in order, which keeps
the default path deterministic.
"""

import contextlib
import logging
import multiprocessing
import threading
from concurrent.futures import (
    ProcessPoolExecutor, ThreadPoolExecutor, FIRST_COMPLETED, wait
)

from UCluster._Exceptions import CancelledException
from UCluster.Managers._ConfigManager import get_config

logger = logging.getLogger(__name__)

# seconds between checks of the caller's token while waiting on workers
POLL_SECONDS = 0.05


class CancelToken(object):
    """Cooperative cancellation flag polled by long searches.  Worker
    processes need an event from a multiprocessing.Manager."""

    def __init__(self, event=None):
        self._event = threading.Event() if event is None else event

    def cancel(self):
        self._event.set()

    @property
    def cancelled(self):
        return self._event.is_set()

    def check(self):
        if self._event.is_set():
            raise CancelledException("search cancelled")


def check_token(token):
    if token is not None:
        token.check()


class WorkerPool(object):
    """Run a function over a list of argument tuples."""

    def __init__(self, workers=None, use_threads=False):
        if workers is None:
            workers = get_config().workers
        self.workers = max(1, int(workers))
        self.use_threads = use_threads

    def _executor(self):
        if self.use_threads:
            return ThreadPoolExecutor(max_workers=self.workers)
        return ProcessPoolExecutor(max_workers=self.workers)

    def map(self, fn, args_list):
        """Results of fn(*args) for each args, in order."""
        args_list = list(args_list)
        if self.workers == 1 or len(args_list) <= 1:
            return [fn(*args) for args in args_list]
        with self._executor() as ex:
            futures = [ex.submit(fn, *args) for args in args_list]
            return [f.result() for f in futures]

    def _shared_token(self, stack):
        if self.use_threads:
            return CancelToken()
        manager = stack.enter_context(multiprocessing.Manager())
        return CancelToken(manager.Event())

    def first_success(self, fn, args_list, token=None, pass_token=False):
        """The first result of fn(*args) that is not None.  Sequentially this
        is the first in list order; in parallel it is the first to finish.

        With pass_token, fn is also called with token=...  Sequentially that
        is the caller's token.  In parallel it is a token shared by the
        workers, set as soon as a result is found or the caller's token is
        set, so that calls still running stop at their next poll."""
        args_list = list(args_list)
        if self.workers == 1 or len(args_list) <= 1:
            for args in args_list:
                check_token(token)
                result = fn(*args, token=token) if pass_token else fn(*args)
                if result is not None:
                    return result
            return None
        with contextlib.ExitStack() as stack:
            shared = self._shared_token(stack) if pass_token else None
            kwargs = {"token": shared} if pass_token else {}
            ex = self._executor()
            # runs before the manager shuts down
            stack.callback(ex.shutdown, wait=True, cancel_futures=True)
            pending = set(ex.submit(fn, *args, **kwargs) for args in args_list)
            while pending:
                done, pending = wait(pending, timeout=POLL_SECONDS,
                                     return_when=FIRST_COMPLETED)
                if token is not None and token.cancelled:
                    if shared is not None:
                        shared.cancel()
                    token.check()
                for f in done:
                    result = f.result()
                    if result is not None:
                        if shared is not None:
                            shared.cancel()
                        for p in pending:
                            p.cancel()
                        logger.debug(
                            "first success found, cancelled {} pending".format(
                                len(pending)
                            )
                        )
                        return result
            return None
