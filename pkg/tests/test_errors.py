"""
Тесты для проверки иерархии исключений и предупреждений
"""
import unittest
import os
import sys
import warnings
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

import pantsurfaces as ps
from pantsurfaces import errors


class TestErrorHierarchy(unittest.TestCase):
    """Тесты для иерархии исключений pantsurfaces"""

    def test_all_errors_are_value_errors(self):
        """Все исключения пакета наследуют PantsError и ValueError"""
        for name in dir(errors):
            obj = getattr(errors, name)
            if isinstance(obj, type) and issubclass(obj, Exception) and \
                    not issubclass(obj, Warning):
                self.assertTrue(issubclass(obj, ps.PantsError), name)
                self.assertTrue(issubclass(obj, ValueError), name)

    def test_all_warnings(self):
        """Все предупреждения пакета наследуют PantsWarning"""
        for cls in (ps.PantsEstimateWarning, ps.PantsFitWarning,
                    ps.PantsRowWarning, ps.PantsThresholdWarning):
            self.assertTrue(issubclass(cls, ps.PantsWarning))
            self.assertFalse(issubclass(cls, ps.PantsError))

    def test_categories(self):
        """Тест распределения исключений по категориям"""
        pairs = (
            (ps.PantsDriftError, ps.PantsGeometryError),
            (ps.PantsClosureError, ps.PantsHexagonError),
            (ps.PantsCountCapError, ps.PantsOrbitError),
            (ps.PantsFitError, ps.PantsOrbitError),
            (ps.PantsDisconnectedError, ps.PantsGraphError),
            (ps.PantsGraphFormatError, ps.PantsGraphError),
            (ps.PantsLedgerError, ps.PantsExplorationError),
            (ps.PantsPoolDepletedError, ps.PantsExplorationError),
            (ps.PantsStateCapError, ps.PantsSearchError),
            (ps.PantsBoundsError, ps.PantsSearchError),
            (ps.PantsConfigError, ps.PantsCampaignError),
            )
        for leaf, base in pairs:
            self.assertTrue(issubclass(leaf, base), leaf.__name__)

    def test_state_cap_carries_field(self):
        """Исключение превышения числа состояний хранит частичный результат"""
        exc = ps.PantsStateCapError('too many states', field='partial')
        self.assertEqual(exc.field, 'partial')
        self.assertEqual(str(exc), 'too many states')
        self.assertIsNone(ps.PantsStateCapError('x').field)

    def test_errors_from_operations(self):
        """Тест исключений, возникающих при неверных аргументах"""
        with self.assertRaises(ps.PantsHexagonError):
            ps.build_hexagon(-1.0)
        with self.assertRaises(ps.PantsOrbitError):
            ps.count(2.0, -0.5)
        with self.assertRaises(ps.PantsGraphError):
            ps.sample_graph(-3, 0)
        with self.assertRaises(ps.PantsExplorationError):
            ps.bad_step_prob(0, 1, 0)
        with self.assertRaises(ps.PantsBoundsError):
            ps.area_lower_bound(1)
        with self.assertRaises(ValueError):
            ps.explore(1, 2.0, epsilon=0.0)

    def test_warnings_can_be_filtered(self):
        """Предупреждения управляются модулем warnings"""
        g = ps.sample_graph(16, 0)
        while not ps.is_connected(g):
            g = ps.sample_graph(16, g.seed + 1)
        with warnings.catch_warnings(record=True) as w:
            warnings.simplefilter('ignore', ps.PantsEstimateWarning)
            ps.graph_diameter(g, sample_above=4, sources=2)
            self.assertEqual(len(w), 0)
        with warnings.catch_warnings(record=True) as w:
            warnings.simplefilter('always')
            ps.graph_diameter(g, sample_above=4, sources=2)
            self.assertEqual(len(w), 1)


if __name__ == '__main__':
    unittest.main()
