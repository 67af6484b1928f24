"""Test suite package for gmpark."""
