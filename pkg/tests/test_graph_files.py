"""
Тесты для чтения и записи файлов с графами
"""
import unittest
import io
import os
import sys
import tempfile
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

import pantsurfaces as ps


class TestGraphFiles(unittest.TestCase):
    """Тесты для формата файлов с тривалентными графами"""

    def setUp(self):
        """Подготовка тестового окружения"""
        self.temp_dir = tempfile.mkdtemp()

    def tearDown(self):
        """Очистка после тестов"""
        for file in os.listdir(self.temp_dir):
            os.remove(os.path.join(self.temp_dir, file))
        os.rmdir(self.temp_dir)

    def test_round_trip_file(self):
        """Тест записи графа в файл и чтения обратно"""
        graph = ps.sample_graph(25, 123)
        filename = os.path.join(self.temp_dir, 'graph.txt')
        ps.write_graph(graph, filename)
        loaded = ps.read_graph(filename)
        self.assertEqual(loaded, graph)
        self.assertEqual(loaded.seed, 123)

    def test_header(self):
        """Тест заголовка файла и неизвестного зерна"""
        graph = ps.TrivalentGraph.from_pairs(
            1, [(0, 0, 1, 0), (0, 1, 1, 1), (0, 2, 1, 2)])
        out = io.StringIO()
        ps.write_graph(graph, out)
        lines = out.getvalue().splitlines()
        self.assertEqual(lines[0], 'n=1 seed=-1')
        self.assertEqual(lines[1:], ['0 0 1 0', '0 1 1 1', '0 2 1 2'])
        loaded = ps.read_graph(io.StringIO(out.getvalue()))
        self.assertIsNone(loaded.seed)
        self.assertEqual(loaded, graph)

    def test_comments_and_blank_lines(self):
        """Комментарии и пустые строки пропускаются"""
        text = '# theta\nn=1\n\n0 0 1 0\n0 1 1 1\n# last\n0 2 1 2\n'
        graph = ps.read_graph(io.StringIO(text))
        self.assertEqual(graph.n, 1)
        self.assertTrue(ps.is_connected(graph))

    def test_malformed_files(self):
        """Тест чтения повреждённых файлов"""
        bad = (
            '',
            'seed=4\n0 0 1 0\n0 1 1 1\n0 2 1 2\n',
            'n=one\n',
            'n=1 colour=red\n0 0 1 0\n0 1 1 1\n0 2 1 2\n',
            'n=1\n0 0 1 0\n0 1 1 1\n',
            'n=1\n0 0 1\n0 1 1 1\n0 2 1 2\n',
            'n=1\n0 0 1 x\n0 1 1 1\n0 2 1 2\n',
            )
        for text in bad:
            with self.assertRaises(ps.PantsGraphFormatError, msg=repr(text)):
                ps.read_graph(io.StringIO(text))

    def test_invalid_matching(self):
        """Строки файла должны задавать совершенное паросочетание"""
        text = 'n=1\n0 0 1 0\n0 0 1 1\n0 2 1 2\n'
        with self.assertRaises(ps.PantsGraphError):
            ps.read_graph(io.StringIO(text))
        text = 'n=1\n0 0 1 0\n0 1 1 1\n0 2 2 2\n'
        with self.assertRaises(ps.PantsGraphError):
            ps.read_graph(io.StringIO(text))


if __name__ == '__main__':
    unittest.main()
