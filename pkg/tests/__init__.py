"""Test suite for the kappa toolkit."""
