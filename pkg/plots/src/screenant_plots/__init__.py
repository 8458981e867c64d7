"""Figure rendering for screenant sweep results."""

from .figures import (
    FIGURES,
    REQUIRED_COLUMNS,
    FigureSpec,
    RenderResult,
    SchemaMismatchError,
    read_summary,
    render,
)

__version__ = "0.1.0"

__all__ = [
    "FIGURES",
    "REQUIRED_COLUMNS",
    "FigureSpec",
    "RenderResult",
    "SchemaMismatchError",
    "read_summary",
    "render",
    "__version__",
]
