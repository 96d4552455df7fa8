"""
Grid Serialization

Writes a SignGrid as
- <prefix>.csv      one row per cell: d1,d2,b_dg,b,b_g,sign,magnitude
- <prefix>_sign.ppm plain-text colour image of the sign
- <prefix>_mag.pgm  plain-text grayscale image of |B_g - reference|

Images put d1 on the horizontal axis (increasing rightward) and d2 on the
vertical axis (increasing downward). Both use maxval 255.
"""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Optional, Tuple, Union

import numpy as np

from src.core.audit import Reference, SignGrid
from src.utils.exceptions import OutputError, ValidationError

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]

BLUE = (0, 0, 255)
BLACK = (0, 0, 0)
RED = (255, 0, 0)
YELLOW = (255, 255, 0)

SIGN_COLORS: Dict[Reference, Dict[int, Tuple[int, int, int]]] = {
    Reference.BDG: {-1: BLUE, 0: BLACK, 1: RED},
    Reference.B: {-1: BLUE, 0: BLACK, 1: YELLOW},
}

CSV_COLUMNS = ["d1", "d2", "b_dg", "b", "b_g", "sign", "magnitude"]


@dataclass(frozen=True)
class FigureFiles:
    """Paths written by write_figures; images left out are None"""
    csv: Path
    sign_image: Optional[Path] = None
    magnitude_image: Optional[Path] = None

    def to_dict(self) -> Dict[str, str]:
        written = {
            "csv": self.csv,
            "sign_image": self.sign_image,
            "magnitude_image": self.magnitude_image,
        }
        return {key: str(path) for key, path in written.items() if path is not None}


def sign_image(grid: SignGrid) -> np.ndarray:
    """(rows, cols, 3) uint8 array coloured by sign"""
    palette = SIGN_COLORS[grid.reference]
    rgb = np.zeros(grid.sign.shape + (3,), dtype=np.uint8)
    for sign, color in palette.items():
        rgb[grid.sign == sign] = color
    return rgb


def magnitude_image(grid: SignGrid) -> np.ndarray:
    """
    Magnitudes scaled linearly onto 0..255 by the grid maximum.

    An all-zero grid stays black.
    """
    peak = int(grid.magnitude.max()) if grid.magnitude.size else 0
    if peak == 0:
        return np.zeros(grid.magnitude.shape, dtype=np.uint8)
    return ((grid.magnitude * 255) // peak).astype(np.uint8)


def _write_text(path: Path, text: str):
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", newline="\n") as f:
            f.write(text)
    except OSError as e:
        raise OutputError(f"Could not write {path}: {e}")


def write_ppm(path: PathLike, rgb: np.ndarray) -> Path:
    """Write a plain (P3) PPM with one pixel row per line"""
    path = Path(path)
    height, width = rgb.shape[:2]
    lines = ["P3", f"{width} {height}", "255"]
    for row in rgb:
        lines.append(" ".join(f"{r} {g} {b}" for r, g, b in row.tolist()))
    _write_text(path, "\n".join(lines) + "\n")
    logger.debug(f"Wrote {width}x{height} PPM to {path}")
    return path


def write_pgm(path: PathLike, gray: np.ndarray) -> Path:
    """Write a plain (P2) PGM with one pixel row per line"""
    path = Path(path)
    height, width = gray.shape
    lines = ["P2", f"{width} {height}", "255"]
    for row in gray:
        lines.append(" ".join(str(v) for v in row.tolist()))
    _write_text(path, "\n".join(lines) + "\n")
    logger.debug(f"Wrote {width}x{height} PGM to {path}")
    return path


def write_grid_csv(path: PathLike, grid: SignGrid) -> Path:
    """Write the grid cells ordered by d1 then d2"""
    path = Path(path)
    frame = grid.to_frame()[CSV_COLUMNS]
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        frame.to_csv(path, index=False, lineterminator="\n")
    except OSError as e:
        raise OutputError(f"Could not write {path}: {e}")
    logger.debug(f"Wrote {len(frame)} grid rows to {path}")
    return path


IMAGE_CHOICES = ("all", "none", "pgm", "ppm")


def write_figures(grid: SignGrid, prefix: PathLike, image: str = "all") -> FigureFiles:
    """
    Write the CSV and the requested images for a grid.

    Args:
        grid: Filled sign grid
        prefix: Output path prefix; suffixes are appended
        image: "all" (both images), "none" (CSV only), "ppm" (sign image)
            or "pgm" (magnitude image)

    Raises:
        ValidationError: If image is not one of IMAGE_CHOICES
        OutputError: If any file cannot be written
    """
    if image not in IMAGE_CHOICES:
        raise ValidationError(f"image must be one of {', '.join(IMAGE_CHOICES)}, got {image!r}")
    prefix = Path(prefix)
    csv_path = write_grid_csv(prefix.with_name(prefix.name + ".csv"), grid)
    sign_path = magnitude_path = None
    if image in ("all", "ppm"):
        sign_path = write_ppm(prefix.with_name(prefix.name + "_sign.ppm"), sign_image(grid))
    if image in ("all", "pgm"):
        magnitude_path = write_pgm(prefix.with_name(prefix.name + "_mag.pgm"), magnitude_image(grid))
    logger.info(f"Figures for {grid.reference.value} over {grid.d_min}..{grid.d_max} written to {prefix}*")
    return FigureFiles(csv=csv_path, sign_image=sign_path, magnitude_image=magnitude_path)
