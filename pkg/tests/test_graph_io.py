import numpy as np
import pytest

from rggclique import graph_io
from rggclique.errors import GraphFormatError
from rggclique.rgg import PlantedInstance, plant_clique, sample_instance
from rggclique.thresholds import ModelParams


@pytest.fixture
def instance():
    params = ModelParams.from_mu(150.0, 2, 4.0)
    graph = sample_instance(params, seed=404)
    return plant_clique(graph, 6, seed=405)


class TestRoundTrip:
    def test_graph_round_trip(self, tmp_path, instance):
        path = tmp_path / "graph.txt"
        graph = instance.graph
        graph_io.write_graph(graph, path)
        loaded = graph_io.read_graph(path)
        assert np.array_equal(loaded.positions, graph.positions)
        assert np.array_equal(loaded.indptr, graph.indptr)
        assert np.array_equal(loaded.indices, graph.indices)
        assert loaded.params.d == graph.params.d
        assert loaded.params.radius == graph.params.radius

    def test_instance_round_trip(self, tmp_path, instance):
        path = tmp_path / "instance.txt"
        graph_io.write_instance(instance, path)
        loaded = graph_io.read(path)
        assert isinstance(loaded, PlantedInstance)
        assert np.array_equal(loaded.clique, instance.clique)
        assert loaded.planted_edges == instance.planted_edges
        assert np.array_equal(loaded.graph.indices, instance.graph.indices)

    def test_empty_graph_round_trip(self, tmp_path):
        params = ModelParams.from_mu(1e-9, 2, 1e-10)
        graph = sample_instance(params, seed=0)
        assert graph.num_vertices == 0
        path = tmp_path / "empty.txt"
        graph_io.write_graph(graph, path)
        loaded = graph_io.read(path)
        assert loaded.num_vertices == 0

    def test_positions_survive_17_digits(self, tmp_path, instance):
        path = tmp_path / "graph.txt"
        graph_io.write_graph(instance.graph, path)
        loaded = graph_io.read_graph(path)
        assert np.array_equal(loaded.positions, instance.graph.positions)  # bit-exact


class TestErrors:
    def write_lines(self, tmp_path, lines):
        path = tmp_path / "bad.txt"
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        return path

    def test_bad_header(self, tmp_path):
        path = self.write_lines(tmp_path, ["nonsense 1 2 3"])
        with pytest.raises(GraphFormatError) as excinfo:
            graph_io.read(path)
        assert excinfo.value.line_number == 1

    def test_bad_coordinate_count(self, tmp_path):
        path = self.write_lines(tmp_path, [
            "rggraph v1 2 0.1 1",
            "0.5",
            "edges 0",
        ])
        with pytest.raises(GraphFormatError) as excinfo:
            graph_io.read(path)
        assert excinfo.value.line_number == 2

    def test_out_of_range_coordinate(self, tmp_path):
        path = self.write_lines(tmp_path, [
            "rggraph v1 2 0.1 1",
            "0.5 1.5",
            "edges 0",
        ])
        with pytest.raises(GraphFormatError) as excinfo:
            graph_io.read(path)
        assert excinfo.value.line_number == 2

    def test_unsorted_edges(self, tmp_path):
        path = self.write_lines(tmp_path, [
            "rggraph v1 1 0.1 3",
            "0.1", "0.15", "0.2",
            "edges 2",
            "1 2",
            "0 1",
        ])
        with pytest.raises(GraphFormatError) as excinfo:
            graph_io.read(path)
        assert excinfo.value.line_number == 7

    def test_truncated_file(self, tmp_path):
        path = self.write_lines(tmp_path, [
            "rggraph v1 1 0.1 2",
            "0.1",
        ])
        with pytest.raises(GraphFormatError) as excinfo:
            graph_io.read(path)
        assert excinfo.value.line_number == 3

    def test_instance_rejected_by_read_graph(self, tmp_path, instance):
        path = tmp_path / "instance.txt"
        graph_io.write_instance(instance, path)
        with pytest.raises(GraphFormatError):
            graph_io.read_graph(path)

    def test_planted_pair_outside_clique(self, tmp_path):
        path = self.write_lines(tmp_path, [
            "rggraph v1 1 0.1 4",
            "0.1", "0.15", "0.5", "0.55",
            "edges 2",
            "0 1",
            "2 3",
            "clique 2",
            "0 1",
            "planted 1",
            "2 3",
        ])
        with pytest.raises(GraphFormatError) as excinfo:
            graph_io.read(path)
        assert excinfo.value.line_number == 12
