#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# compute/parallel.py

"""
Ordered candidate searches, run in this process or in a pool of workers.

A search walks a stream of candidates (primes, ideals), evaluates each one
independently and folds the values into a result in candidate order, stopping
as soon as the result is decided. Evaluation may happen in worker processes;
folding always happens here, so a parallel search returns exactly what the
sequential one would.
"""

import logging
import logging.config
import multiprocessing
import sys
import threading
from itertools import islice

from tblib import Traceback

from .. import config
from ..log import progress_bar

log = logging.getLogger(__name__)

#: Sentinel telling a worker to stop, and telling the parent a worker stopped.
STOP = None

#: Number of tasks kept in flight per worker.
TASKS_PER_WORKER = 4


def get_num_processes():
    """Return the number of worker processes requested by
    ``config.NUMBER_OF_CORES``, capped at the number of available cores.
    """
    available = multiprocessing.cpu_count()
    requested = config.NUMBER_OF_CORES
    if requested == 0:
        raise ValueError("Invalid NUMBER_OF_CORES; value may not be 0.")
    if requested < 0:
        requested += available + 1
        if requested <= 0:
            raise ValueError(
                "Invalid NUMBER_OF_CORES; {} leaves no cores out of {}.".format(
                    config.NUMBER_OF_CORES, available
                )
            )
    if requested > available:
        log.info("Requested %s cores; only %s available", requested, available)
        return available
    return requested


class ExceptionWrapper:
    """A picklable exception with its traceback, sent from a worker to the
    parent process.
    """

    def __init__(self, exception):
        self.exception = exception
        self.tb = Traceback(sys.exc_info()[2])

    def reraise(self):
        raise self.exception.with_traceback(self.tb.as_traceback())


def configure_worker_logging(queue):  # coverage: disable
    """Send every record logged in a worker process to ``queue``."""
    logging.config.dictConfig(
        {
            "version": 1,
            "disable_existing_loggers": False,
            "handlers": {
                "parent": {"class": "logging.handlers.QueueHandler", "queue": queue}
            },
            "root": {"level": "DEBUG", "handlers": ["parent"]},
        }
    )


def relay_logs(queue):
    """Hand records from worker processes to the loggers they were sent to."""
    for record in iter(queue.get, STOP):
        logging.getLogger(record.name).handle(record)


def _work(evaluate, context, tasks, replies, logs, stopped, settings):
    # coverage: disable
    try:
        # Loading the options reconfigures logging, so it comes first.
        config.load_dict(settings)
        configure_worker_logging(logs)
        for index, candidate in iter(tasks.get, STOP):
            if stopped.is_set():
                continue
            replies.put((index, evaluate(candidate, *context)))
    except Exception as e:  # pylint: disable=broad-except
        stopped.set()
        replies.put(ExceptionWrapper(e))
    finally:
        replies.put(STOP)


class WorkerPool:
    """Worker processes evaluating ``(index, candidate)`` tasks.

    Use as a context manager; leaving the block stops the workers, drains
    their replies and joins them.
    """

    def __init__(self, evaluate, context, size=None):
        self.size = get_num_processes() if size is None else size
        self.tasks = multiprocessing.Queue()
        self.replies = multiprocessing.Queue()
        self.logs = multiprocessing.Queue()
        self.stopped = multiprocessing.Event()
        args = (
            evaluate,
            context,
            self.tasks,
            self.replies,
            self.logs,
            self.stopped,
            config.snapshot(),
        )
        self.processes = [
            multiprocessing.Process(target=_work, args=args, daemon=True)
            for _ in range(self.size)
        ]
        self.log_thread = threading.Thread(
            target=relay_logs, args=(self.logs,), daemon=True
        )

    @property
    def capacity(self):
        return self.size * TASKS_PER_WORKER

    def __enter__(self):
        self.log_thread.start()
        for process in self.processes:
            process.start()
        log.debug("Started %s workers", self.size)
        return self

    def submit(self, task):
        self.tasks.put(task)

    def stop(self):
        """Tell the workers to skip their remaining tasks."""
        self.stopped.set()

    def __exit__(self, *exc):
        self.stop()
        for _ in self.processes:
            self.tasks.put(STOP)
        # A worker cannot exit while its replies are unread.
        running = self.size
        while running:
            if self.replies.get() is STOP:
                running -= 1
        for process in self.processes:
            process.join()
        self.logs.put(STOP)
        self.log_thread.join()
        for queue in (self.tasks, self.replies, self.logs):
            queue.close()
        log.debug("Workers joined")
        return False


class CandidateSearch:
    """A search over candidates that folds their values in order.

    Subclasses implement:

        - ``evaluate(candidate, *context)``, a static method computing the
          value of one candidate;
        - ``initial()``, the result before any candidate is seen; and
        - ``accept(value, result)``, which folds the value of the next
          candidate into the result and sets ``self.done`` once the result is
          decided.

    Values computed ahead of their turn are held until every earlier
    candidate has been accepted.

    Args:
        candidates (Iterable): The candidates, in search order.
        *context: Data ``evaluate`` needs besides the candidate. It must be
            picklable for parallel runs.
    """

    #: Label of the progress bar.
    description = ""

    def __init__(self, candidates, *context):
        self.candidates = candidates
        self.context = context
        self.done = False
        self.pending = {}
        self.position = 0
        self.progress = self.init_progress_bar()

    @staticmethod
    def evaluate(candidate, *context):
        raise NotImplementedError

    def initial(self):
        raise NotImplementedError

    def accept(self, value, result):
        raise NotImplementedError

    def init_progress_bar(self):
        # A bar with a total needs the candidates up front.
        if not config.PROGRESS_BARS:
            return progress_bar(desc=self.description, disable=True)
        self.candidates = list(self.candidates)
        return progress_bar(total=len(self.candidates), desc=self.description)

    def fold(self, index, value, result):
        """Record the value of candidate ``index`` and accept every value that
        is now next in line.
        """
        self.pending[index] = value
        while self.position in self.pending and not self.done:
            result = self.accept(self.pending.pop(self.position), result)
            self.position += 1
        self.progress.update(1)
        return result

    def run_sequential(self):
        result = self.initial()
        for index, candidate in enumerate(self.candidates):
            result = self.fold(index, self.evaluate(candidate, *self.context), result)
            if self.done:
                break
        return result

    def run_parallel(self):
        result = self.initial()
        tasks = enumerate(self.candidates)
        with WorkerPool(self.evaluate, self.context) as pool:
            in_flight = 0
            for task in islice(tasks, pool.capacity):
                pool.submit(task)
                in_flight += 1
            while in_flight and not self.done:
                reply = pool.replies.get()
                if isinstance(reply, ExceptionWrapper):
                    reply.reraise()
                in_flight -= 1
                result = self.fold(*reply, result)
                for task in islice(tasks, 1):
                    pool.submit(task)
                    in_flight += 1
        return result

    def run(self, parallel=None):
        """Run the search and return the folded result.

        Keyword Args:
            parallel (bool): Evaluate candidates in worker processes. Defaults
                to ``config.PARALLEL_CANDIDATE_SEARCH``.
        """
        if parallel is None:
            parallel = config.PARALLEL_CANDIDATE_SEARCH
        try:
            if parallel:
                return self.run_parallel()
            return self.run_sequential()
        finally:
            self.progress.close()
