"""Example tests for cnoidal."""

from pdum import cnoidal


def test_version():
    """Test that the package has a version."""
    assert hasattr(cnoidal, "__version__")
    assert isinstance(cnoidal.__version__, str)
    assert len(cnoidal.__version__) > 0


def test_import():
    """Test that the package can be imported."""
    assert cnoidal is not None


def test_public_api():
    """Test that every name in __all__ resolves."""
    missing = [name for name in cnoidal.__all__ if not hasattr(cnoidal, name)]
    assert missing == []
