"""
Unit tests for grid serialization (CSV, PPM, PGM)
"""

import numpy as np
import pytest

from src.core.audit import Reference, make_grid
from src.core.figures import (
    BLACK,
    BLUE,
    RED,
    YELLOW,
    magnitude_image,
    sign_image,
    write_figures,
    write_pgm,
    write_ppm,
)
from src.utils.exceptions import OutputError, ValidationError


@pytest.fixture(scope="module")
def small_grid():
    """B_g against B over 4..12"""
    return make_grid(Reference.B, 4, 12)


class TestImages:
    """Test the in-memory images"""

    def test_sign_colors_bdg(self):
        grid = make_grid(Reference.BDG, 4, 12)
        rgb = sign_image(grid)
        assert rgb.shape == (9, 9, 3)
        assert tuple(rgb[0, 0]) == BLACK        # (4, 4): B_g = B_DG
        assert tuple(rgb[9 - 4, 9 - 4]) == BLUE  # (9, 9): B_g < B_DG

    def test_sign_colors_b(self, small_grid):
        rgb = sign_image(small_grid)
        assert tuple(rgb[7 - 4, 7 - 4]) == BLACK
        positive = small_grid.sign == 1
        if positive.any():
            assert tuple(rgb[positive][0]) == YELLOW
        assert RED not in {tuple(px) for px in rgb.reshape(-1, 3)}

    def test_magnitude_scaling(self, small_grid):
        gray = magnitude_image(small_grid)
        assert gray.dtype == np.uint8
        assert gray.max() == 255
        assert gray[7 - 4, 7 - 4] == 0

    def test_zero_magnitude_stays_black(self, small_grid):
        zero = make_grid(Reference.B, 4, 12)
        zero.magnitude = np.zeros_like(zero.magnitude)
        assert not magnitude_image(zero).any()


class TestWriters:
    """Test the plain-text writers"""

    def test_ppm_header(self, tmp_path):
        rgb = np.zeros((2, 3, 3), dtype=np.uint8)
        rgb[0, 0] = RED
        path = write_ppm(tmp_path / "x.ppm", rgb)
        lines = path.read_text().splitlines()
        assert lines[:3] == ["P3", "3 2", "255"]
        assert lines[3].split()[:3] == ["255", "0", "0"]
        assert len(lines) == 5

    def test_pgm_header(self, tmp_path):
        gray = np.array([[0, 128], [255, 1]], dtype=np.uint8)
        path = write_pgm(tmp_path / "x.pgm", gray)
        assert path.read_text() == "P2\n2 2\n255\n0 128\n255 1\n"

    def test_write_figures(self, tmp_path, small_grid):
        files = write_figures(small_grid, tmp_path / "out" / "grid")
        assert files.csv.name == "grid.csv"
        assert files.sign_image.name == "grid_sign.ppm"
        assert files.magnitude_image.name == "grid_mag.pgm"

        csv_lines = files.csv.read_text().splitlines()
        assert csv_lines[0] == "d1,d2,b_dg,b,b_g,sign,magnitude"
        assert len(csv_lines) == 1 + 81
        assert "7,7,27,19,19,0,0" in csv_lines
        assert files.sign_image.read_text().startswith("P3\n9 9\n255\n")
        assert files.magnitude_image.read_text().startswith("P2\n9 9\n255\n")

    def test_deterministic(self, tmp_path, small_grid):
        first = write_figures(small_grid, tmp_path / "a")
        second = write_figures(make_grid(Reference.B, 4, 12, workers=3), tmp_path / "b")
        assert first.csv.read_bytes() == second.csv.read_bytes()
        assert first.sign_image.read_bytes() == second.sign_image.read_bytes()

    def test_unwritable_path(self, tmp_path, small_grid):
        blocker = tmp_path / "blocker"
        blocker.write_text("not a directory")
        with pytest.raises(OutputError):
            write_figures(small_grid, blocker / "grid")

    @pytest.mark.parametrize("image,sign_written,magnitude_written", [
        ("none", False, False),
        ("ppm", True, False),
        ("pgm", False, True),
    ])
    def test_image_choice(self, tmp_path, small_grid, image, sign_written, magnitude_written):
        """The CSV is always written; images only as requested"""
        files = write_figures(small_grid, tmp_path / "grid", image=image)
        assert files.csv.exists()
        assert (tmp_path / "grid_sign.ppm").exists() == sign_written
        assert (tmp_path / "grid_mag.pgm").exists() == magnitude_written
        assert (files.sign_image is not None) == sign_written
        assert ("magnitude_image" in files.to_dict()) == magnitude_written

    def test_unknown_image_choice(self, tmp_path, small_grid):
        with pytest.raises(ValidationError):
            write_figures(small_grid, tmp_path / "grid", image="png")
        assert not (tmp_path / "grid.csv").exists()
