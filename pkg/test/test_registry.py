#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# test/test_registry.py

import pytest

from densecert.registry import Registry


def test_registry():
    registry = Registry()

    assert "2" not in registry
    assert len(registry) == 0

    @registry.register("2", covers=lambda p: p == 2)
    def hurwitz(p):
        return p

    assert "2" in registry
    assert len(registry) == 1
    assert registry["2"] == hurwitz
    assert registry.all() == ["2"]
    assert hurwitz.covers(2)

    with pytest.raises(KeyError):
        registry["3 mod 4"]


def test_registry_rejects_duplicates():
    registry = Registry()
    registry.register("topgen")(print)
    with pytest.raises(KeyError):
        registry.register("topgen")(repr)


def test_first_follows_registration_order():
    registry = Registry()
    registry.register("small", limit=10)(lambda p: p)
    registry.register("large", limit=100)(lambda p: -p)
    assert registry.first(lambda entry: 5 < entry.limit) == "small"
    assert registry.first(lambda entry: 50 < entry.limit) == "large"
    with pytest.raises(KeyError):
        registry.first(lambda entry: 500 < entry.limit)


def test_installed_registries():
    from densecert import cli, quaternion

    assert quaternion.PRESENTATIONS.all() == ["2", "3 mod 4", "5 mod 8", "1 mod 8"]
    assert "quaternion-verify" in cli.COMMANDS
    assert cli.COMMANDS["fiber"].help_text
    assert len(cli.COMMANDS) == 11
