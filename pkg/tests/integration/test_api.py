"""
Integration Tests for the FastAPI service
Tests API endpoints, request validation and response shapes
"""

import pytest
from fastapi.testclient import TestClient
from pathlib import Path
import sys

project_root = Path(__file__).parent.parent.parent
sys.path.insert(0, str(project_root))

from api.main import app


pytestmark = pytest.mark.integration


@pytest.fixture(scope="module")
def client():
    """Create test client"""
    return TestClient(app)


class TestServiceEndpoints:
    """Test root and health endpoints"""

    def test_root_endpoint(self, client):
        """Test GET / endpoint"""
        response = client.get("/")
        assert response.status_code == 200

        data = response.json()
        assert data['name'] == "curvebounds"
        assert data['version'] == "1.0.0"
        assert data['status'] == "online"

    def test_health_check(self, client):
        """Test GET /health endpoint"""
        response = client.get("/health")
        assert response.status_code == 200

        data = response.json()
        assert data['status'] == "healthy"
        assert 'timestamp' in data


class TestBoundEndpoints:
    """Test /bounds"""

    def test_bounds(self, client):
        response = client.get("/bounds/6/6")
        assert response.status_code == 200

        data = response.json()
        assert data['b'] == 15
        assert data['b_g'] == 14
        assert data['best_proved'] == 15
        assert data['attainable'] is True
        ids = [entry['result_id'] for entry in data['provenance']]
        assert "case_threshold" in ids
        assert "equal_degree" in ids

    def test_bounds_rejects_low_degree(self, client):
        response = client.get("/bounds/3/6")
        assert response.status_code == 400
        assert "degrees >= 4" in response.json()['detail']

    def test_bounds_rejects_non_integer(self, client):
        response = client.get("/bounds/six/6")
        assert response.status_code == 422


class TestHVectorEndpoints:
    """Test /hvectors"""

    def test_genus(self, client):
        response = client.get("/hvectors/genus", params={"h": "1,3,5,4,3"})
        assert response.status_code == 200
        assert response.json() == {"hvector": [1, 3, 5, 4, 3], "rao_defect": 0, "genus": 22}

    def test_genus_with_defect(self, client):
        response = client.get("/hvectors/genus", params={"h": "1,3,5,4,3", "k": 2})
        assert response.json()['genus'] == 20

    def test_genus_bad_hvector(self, client):
        response = client.get("/hvectors/genus", params={"h": "2,3"})
        assert response.status_code == 400

    def test_extremal(self, client):
        response = client.get("/hvectors/extremal/16")
        assert response.status_code == 200
        assert response.json() == {"d": 16, "hvector": [1, 3, 4, 4, 3, 1], "g_extremal": 25}

    def test_admissible(self, client):
        response = client.get("/hvectors/admissible/10")
        assert response.status_code == 200

        data = response.json()
        assert data['count'] == 3
        assert data['has_more'] is False
        assert data['hvectors'][0] == {"hvector": "1,3,4,2", "genus": 8, "regularity": 4}

    def test_admissible_page(self, client):
        response = client.get("/hvectors/admissible/10", params={"limit": 2, "offset": 1})
        assert response.status_code == 200

        data = response.json()
        assert data['count'] == 2
        assert data['offset'] == 1
        assert data['has_more'] is False
        assert [row['hvector'] for row in data['hvectors']] == ["1,3,5,1", "1,3,6"]

    def test_admissible_high_degree_returns_one_page(self, client, clean_env):
        """A valid degree near the enumeration cap answers with the first page"""
        response = client.get("/hvectors/admissible/118", params={"limit": 5})
        assert response.status_code == 200

        data = response.json()
        assert data['count'] == 5
        assert data['has_more'] is True

    @pytest.mark.parametrize("params", [{"limit": 0}, {"limit": 10001}, {"offset": -1}, {"offset": 100001}])
    def test_admissible_window_rejected(self, client, params):
        response = client.get("/hvectors/admissible/10", params=params)
        assert response.status_code == 422

    def test_admissible_out_of_range(self, client):
        response = client.get("/hvectors/admissible/5")
        assert response.status_code == 400


class TestSurfaceEndpoints:
    """Test /surfaces"""

    def test_scroll(self, client):
        response = client.get("/surfaces/scroll/6/8")
        assert response.status_code == 200
        assert response.json() == {
            "maximum": 21,
            "maximizers": [[3, 1]],
            "classes": [["3h", "7h-6e"]],
        }

    def test_delpezzo(self, client):
        response = client.get("/surfaces/delpezzo", params={"k": 2, "l": 3})
        assert response.status_code == 200

        data = response.json()
        assert data['intersection'] == 13
        assert data['degrees'] == [5, 7]
        assert data['genera'] == [0, 0]
        assert data['L1']['rendered'] == "5h-e1-2e2-2e3-2e4-3e5"

    def test_delpezzo_rejects(self, client):
        response = client.get("/surfaces/delpezzo", params={"k": 0, "l": 3})
        assert response.status_code == 400


class TestVerifyEndpoints:
    """Test /verify and /acm"""

    def test_table1(self, client):
        response = client.get("/verify/table1")
        assert response.status_code == 200

        data = response.json()
        assert data['matches'] == 48
        assert data['total'] == 49
        assert data['headline'] == "48/49 match; (100,100) flagged"
        assert data['discrepancies'][0]['d1'] == 100

    def test_cases(self, client):
        response = client.get("/verify/cases", params={"max": 40})
        assert response.status_code == 200

        data = response.json()
        assert data['range_max'] == 40
        assert data['failures'] == 0

    @pytest.mark.parametrize("value", [5, 1000])
    def test_cases_range(self, client, value):
        response = client.get("/verify/cases", params={"max": value})
        assert response.status_code == 400

    def test_acm_flagged(self, client):
        response = client.get("/acm/10/8")
        assert response.status_code == 200

        data = response.json()
        assert data['flagged'] is True
        assert data['argument'] == "regularity"
        assert data['hvector'] == "1,3,3,1"

    def test_acm_with_hvector(self, client):
        response = client.get("/acm/10/8", params={"h": "1,3,4"})
        assert response.json()['flagged'] is False

    def test_acm_genus_argument(self, client):
        response = client.get("/acm/7/9")
        assert response.json()['argument'] == "genus"
