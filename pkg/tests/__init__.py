"""Test suite for edgecalc"""
