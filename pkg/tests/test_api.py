import pytest

from app import create_app
from config import Config


class _TestConfig(Config):
    TESTING = True
    MAX_GRAPH_ORDER = 20
    MAX_ARCS = 40
    MAX_SAMPLES = 10


@pytest.fixture
def client():
    return create_app(_TestConfig).test_client()


class TestIndex:
    def test_index(self, client):
        data = client.get('/').get_json()
        assert data['name'] == 'qwzeta'
        assert data['version'] == '1.0.0'

    def test_presets(self, client):
        data = client.get('/presets').get_json()
        assert [p['id'] for p in data] == ['bowtie', 'cube', 'k33', 'petersen']


class TestGraphs:
    def test_summary(self, client):
        data = client.get('/graphs/complete:4').get_json()
        assert (data['n'], data['m']) == (4, 6)
        assert data['case'] == 'M_GT_N'
        assert data['degrees'] == [3, 3, 3, 3]

    def test_unknown_source(self, client):
        response = client.get('/graphs/hypercube:3')
        assert response.status_code == 400
        assert 'error' in response.get_json()

    def test_files_are_refused(self, client, tmp_path):
        path = tmp_path / 'g.txt'
        path.write_text('0 1\n', encoding='utf-8')
        assert client.get('/graphs/g.txt').status_code == 400

    def test_order_limit_checked_before_building(self, client):
        response = client.get('/graphs/complete:100000')
        assert response.status_code == 413

    def test_arc_limit_checked_before_building(self, client):
        response = client.get('/graphs/complete:10')
        assert response.status_code == 413
        assert '90 arcs' in response.get_json()['error']

    @pytest.mark.parametrize("source", ["complete:200", "bipartite:40,40", "random:150,5000"])
    def test_default_arc_limit(self, source):
        client = create_app(Config).test_client()
        response = client.get(f'/graphs/{source}')
        assert response.status_code == 413
        assert 'arcs' in response.get_json()['error']

    def test_invalid_family_order(self, client):
        assert client.get('/graphs/cycle:2').status_code == 400


class TestSpectrum:
    def test_rw(self, client):
        data = client.get('/graphs/cycle:4/spectrum').get_json()
        assert data['operator'] == 'rw'
        assert [e['mult'] for e in data['entries']] == [1, 2, 1]

    def test_grover_mapping(self, client):
        data = client.get('/graphs/star:5/spectrum?operator=grover&method=mapping').get_json()
        assert sum(e['mult'] for e in data['entries']) == 8

    def test_unknown_operator(self, client):
        assert client.get('/graphs/cycle:4/spectrum?operator=bogus').status_code == 400

    def test_matrix_only_operator(self, client):
        assert client.get('/graphs/cycle:4/spectrum?operator=degree').status_code == 400

    def test_tolerance_must_be_positive(self, client):
        assert client.get('/graphs/cycle:4/spectrum?tol=0').status_code == 400


class TestZerosAndZeta:
    def test_zeros(self, client):
        data = client.get('/graphs/named:petersen/zeros').get_json()
        assert data['total'] == 30
        assert data['m_spectrum']['infinite'] == 1

    def test_zeta(self, client):
        data = client.get('/graphs/cycle:3/zeta?u=0.5,0&s=0.5').get_json()
        assert data['u']['grover']['re'] == pytest.approx(0.765625)
        assert data['s']['lambda_qw']['re'] == pytest.approx(1 / 144)

    def test_zeta_needs_a_point(self, client):
        assert client.get('/graphs/cycle:3/zeta').status_code == 400

    def test_zeta_pole(self, client):
        assert client.get('/graphs/path:3/zeta?u=1').status_code == 400


class TestVerify:
    def test_all(self, client):
        data = client.get('/graphs/cycle:4/verify?samples=3').get_json()
        assert data['passed'] is True
        assert len(data['reports']) == 8

    def test_too_many_samples(self, client):
        assert client.get('/graphs/cycle:4/verify?samples=11').status_code == 413

    def test_unknown_identity(self, client):
        assert client.get('/graphs/cycle:4/verify?identity=riemann').status_code == 400


class TestAnalyze:
    def test_edges(self, client):
        response = client.post('/analyze', json={'name': 'triangle', 'edges': [[0, 1], [1, 2], [2, 0]]})
        assert response.status_code == 200
        data = response.get_json()
        assert data['graph']['name'] == 'triangle'
        assert data['zeros']['total'] == 6
        assert data['m_spectrum']['infinite'] == 1

    @pytest.mark.parametrize("body", [{}, {'edges': 'abc'}, {'edges': [[0, 1, 2]]}, {'edges': [[0, 0]]}, {'edges': []}])
    def test_invalid_body(self, client, body):
        assert client.post('/analyze', json=body).status_code == 400

    def test_order_limit(self, client):
        edges = [[0, i] for i in range(1, 30)]
        assert client.post('/analyze', json={'edges': edges}).status_code == 413

    def test_arc_limit(self, client):
        edges = [[i, j] for i in range(8) for j in range(i + 1, 8)]
        response = client.post('/analyze', json={'edges': edges})
        assert response.status_code == 413
        assert '56 arcs' in response.get_json()['error']
