"""Tests for argument parsing helpers."""

import pytest

from cli.utils.validators import parse_int_list, parse_label_list, parse_region


class TestParseIntList:
    """Tests for parse_int_list."""

    def test_parses_with_spaces(self):
        """Test whitespace and trailing commas are tolerated."""
        assert parse_int_list(" 3, 4,5,") == [3, 4, 5]

    def test_empty(self):
        """Test an empty list is rejected with the value name."""
        with pytest.raises(ValueError, match="No patch sides"):
            parse_int_list(" , ", "patch sides")

    def test_not_integers(self):
        """Test non-integer items are rejected."""
        with pytest.raises(ValueError, match="Invalid core sizes"):
            parse_int_list("2,three", "core sizes")


class TestParseRegion:
    """Tests for parse_region."""

    def test_tuple(self):
        """Test the region keeps the given order."""
        assert parse_region("7,8,13,14") == (7, 8, 13, 14)

    def test_duplicate_site(self):
        """Test a site listed twice is rejected."""
        with pytest.raises(ValueError, match="twice"):
            parse_region("0,1,0")


class TestParseLabelList:
    """Tests for parse_label_list."""

    def test_labels(self):
        """Test labels are stripped."""
        assert parse_label_list("ghz, w ,w+111") == ["ghz", "w", "w+111"]

    def test_empty(self):
        """Test an empty label list is rejected."""
        with pytest.raises(ValueError):
            parse_label_list(",")
