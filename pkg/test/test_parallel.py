#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# test/test_parallel.py

import multiprocessing
from unittest.mock import patch

import pytest
from hypothesis import given
from hypothesis import strategies as st

from densecert import config
from densecert.compute import parallel


class FirstMultiple(parallel.CandidateSearch):
    """Collect doubled items until one is a multiple of ``divisor``."""

    description = "First multiple"

    @staticmethod
    def evaluate(item, divisor):  # pylint: disable=arguments-differ
        if item < 0:
            raise ValueError("negative item {}".format(item))
        return 2 * item

    def initial(self):
        return []

    def accept(self, value, result):
        result.append(value)
        if value % self.context[0] == 0:
            self.done = True
        return result


def expected_prefix(items, divisor):
    result = []
    for x in items:
        result.append(2 * x)
        if 2 * x % divisor == 0:
            break
    return result


@given(
    st.lists(st.integers(min_value=0, max_value=1000)),
    st.integers(min_value=1, max_value=20),
)
def test_in_order_shortcircuit_sequential(items, divisor):
    result = FirstMultiple(items, divisor).run(parallel=False)
    assert result == expected_prefix(items, divisor)


def test_sequential_accepts_generators():
    items = (x for x in [3, 5, 7, 10, 11])
    assert FirstMultiple(items, 4).run(parallel=False) == [6, 10, 14, 20]


def test_empty_iterable():
    assert FirstMultiple([], 3).run(parallel=False) == []


def test_sequential_exceptions_propagate():
    with pytest.raises(ValueError):
        FirstMultiple([1, -1, 2], 100).run(parallel=False)


def test_run_defaults_to_config():
    mr = FirstMultiple([1, 2], 2)
    with patch.object(mr, "run_sequential", return_value="sequential") as seq:
        with config.override(PARALLEL_CANDIDATE_SEARCH=False):
            assert mr.run() == "sequential"
        seq.assert_called_once()


@pytest.mark.filterwarnings("ignore::DeprecationWarning")
@pytest.mark.parametrize(
    "items,divisor", [(list(range(1, 60)), 7), ([5, 9, 13], 1000)]
)
def test_in_order_shortcircuit_parallel(items, divisor):
    with config.override(NUMBER_OF_CORES=2):
        result = FirstMultiple(items, divisor).run(parallel=True)
    assert result == expected_prefix(items, divisor)


@pytest.mark.filterwarnings("ignore::DeprecationWarning")
def test_parallel_exceptions_are_reraised():
    with config.override(NUMBER_OF_CORES=2):
        with pytest.raises(ValueError, match="negative item"):
            FirstMultiple([1, 2, -3, 4], 100).run(parallel=True)


def test_exception_wrapper_keeps_traceback():
    try:
        raise KeyError("lost")
    except KeyError as e:
        wrapper = parallel.ExceptionWrapper(e)
    with pytest.raises(KeyError) as info:
        wrapper.reraise()
    assert info.traceback


@pytest.mark.parametrize(
    "cores,expected",
    [(1, 1), (-1, multiprocessing.cpu_count()), (10 ** 6, multiprocessing.cpu_count())],
)
def test_num_processes(cores, expected):
    with config.override(NUMBER_OF_CORES=cores):
        assert parallel.get_num_processes() == expected


def test_num_processes_rejects_bad_values():
    with config.override(NUMBER_OF_CORES=0):
        with pytest.raises(ValueError):
            parallel.get_num_processes()
    with config.override(NUMBER_OF_CORES=-(multiprocessing.cpu_count() + 1)):
        with pytest.raises(ValueError):
            parallel.get_num_processes()


def test_progress_bar_materializes_candidates():
    with config.override(PROGRESS_BARS=True):
        mr = FirstMultiple(iter([1, 2, 3]), 5)
    assert mr.progress.total == 3
    mr.progress.close()


def test_values_are_accepted_in_candidate_order():
    search = FirstMultiple([1, 2, 3], 100)
    result = search.initial()
    result = search.fold(2, 6, result)
    assert result == [] and search.pending == {2: 6}
    result = search.fold(0, 2, result)
    assert result == [2]
    result = search.fold(1, 4, result)
    assert result == [2, 4, 6]
    assert not search.pending


@pytest.mark.filterwarnings("ignore::DeprecationWarning")
def test_worker_pool_evaluates_tasks():
    with parallel.WorkerPool(FirstMultiple.evaluate, (3,), size=2) as pool:
        for task in enumerate([5, 7, 9]):
            pool.submit(task)
        replies = sorted(pool.replies.get() for _ in range(3))
    assert replies == [(0, 10), (1, 14), (2, 18)]
    assert all(not process.is_alive() for process in pool.processes)
