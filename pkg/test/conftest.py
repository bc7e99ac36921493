#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# conftest.py

import pytest

from densecert import quadfield, quaternion

# Quadratic fields
# =============================================================================


@pytest.fixture()
def gaussian():
    return quadfield.make_field(-1)


@pytest.fixture()
def eisenstein():
    return quadfield.make_field(-3)


@pytest.fixture()
def minus_five():
    return quadfield.make_field(-5)


@pytest.fixture()
def minus_seven():
    return quadfield.make_field(-7)


@pytest.fixture()
def root_two():
    return quadfield.make_field(2)


@pytest.fixture()
def root_three():
    return quadfield.make_field(3)


# Quaternion orders
# =============================================================================


@pytest.fixture()
def hurwitz():
    return quaternion.make_bpinf(2)


@pytest.fixture()
def order3():
    return quaternion.make_bpinf(3)
