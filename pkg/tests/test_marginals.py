# -*- coding: utf-8 -*-
import math
import itertools
import unittest

import numpy as np

from majoranastates import majoranastates
from majoranastates.errors import NumericalError
from majoranastates.state import (
	FullState, DensityMatrix, COMPUTATIONAL, SYMMETRIC, dicke_state,
	ghz_state, distance, overlap, symmetrize, apply_local, expand_to_full,
	project_to_symmetric, random_symmetric_state)
from majoranastates.constellation import euler_rotation
from majoranastates.slocc import classify
from majoranastates.marginals import (
	AMBIGUOUS, rdm_symmetric, rdm_full, concurrence, three_tangle, dnk_state,
	generalized_dicke_order, generalized_dicke_state, uniqueness_conditions,
	reconstruct_from_two_marginals, marginal_match_search)

def _marginals(state, n):
	"""The first and last N-1 qubit marginals of a state."""
	return (rdm_full(state, range(1, n)), rdm_full(state, range(2, n + 1)))

def _random_unitaries(rng, count):
	return [euler_rotation(*rng.uniform(0.0, math.pi, size=3))
		for _ in range(count)]

def _fidelity(x, y):
	return abs(overlap(x, y)) ** 2 / (
		abs(overlap(x, x)) * abs(overlap(y, y)))

def _random_complex(rng, size=None):
	return rng.normal(size=size) + 1j * rng.normal(size=size)

class TestPartialTraces(unittest.TestCase):
	def test_ghz(self):
		rho = rdm_full(ghz_state(3), [1, 2])
		self.assertTrue(np.allclose(rho.matrix,
			np.diag([0.5, 0.0, 0.0, 0.5])))
		self.assertEqual(rho.basis, COMPUTATIONAL)

	def test_single_qubit_of_w(self):
		rho = rdm_full(dicke_state(3, 1), [2])
		self.assertTrue(np.allclose(rho.matrix, np.diag([2.0, 1.0]) / 3.0))

	def test_keep_order(self):
		state = FullState([0, 1, 0, 0])
		self.assertTrue(np.allclose(rdm_full(state, [2, 1]).matrix,
			np.diag([0.0, 0.0, 1.0, 0.0])))

	def test_chi_marginals(self):
		chi1, chi2 = majoranastates.CHI1, majoranastates.CHI2
		for keep in ([1, 2, 4], [1, 3, 4], [2, 3, 4]):
			self.assertLessEqual(
				rdm_full(chi1, keep).distance(rdm_full(chi2, keep)), 1e-12)
		self.assertAlmostEqual(
			rdm_full(chi1, [1, 2, 3]).distance(rdm_full(chi2, [1, 2, 3])),
			2.0 * math.sqrt(2.0) / 3.0)

	def test_symmetric_basis_matches(self):
		rng = np.random.default_rng(67)
		for n, k in ((3, 1), (4, 2), (6, 3), (7, 2)):
			state = random_symmetric_state(n, rng)
			rho = rdm_symmetric(state, k)
			self.assertEqual(rho.basis, SYMMETRIC)
			for keep in (range(1, k + 1), range(n, n - k, -1)):
				self.assertLessEqual(rho.distance(rdm_full(state, keep)),
					1e-10)

	def test_symmetric_basis_matches_every_subset(self):
		rng = np.random.default_rng(109)
		for n in range(2, 9):
			state = random_symmetric_state(n, rng)
			for k in range(1, n):
				rho = rdm_symmetric(state, k)
				for keep in itertools.combinations(range(1, n + 1), k):
					self.assertLessEqual(rho.distance(rdm_full(state, keep)),
						1e-10)

	def test_two_point_states_have_rank_two(self):
		rng = np.random.default_rng(113)
		for n in range(3, 9):
			for k in range(1, n // 2 + 1):
				d0, d1 = _random_complex(rng, 2)
				state = dnk_state(n, k, d0, d1)
				self.assertLessEqual(rdm_symmetric(state, n - 1).rank(), 2)

	def test_invalid(self):
		self.assertRaises(ValueError, rdm_symmetric, ghz_state(3), 3)
		self.assertRaises(ValueError, rdm_symmetric, ghz_state(3), 0)
		self.assertRaises(ValueError, rdm_full, ghz_state(3), [])
		self.assertRaises(ValueError, rdm_full, ghz_state(3), [1, 1])
		self.assertRaises(ValueError, rdm_full, ghz_state(3), [0, 2])
		self.assertRaises(ValueError, rdm_full, ghz_state(3), [4])

class TestWitnesses(unittest.TestCase):
	def test_bell(self):
		self.assertAlmostEqual(
			concurrence(DensityMatrix.from_pure(ghz_state(2))), 1.0)

	def test_product(self):
		self.assertAlmostEqual(
			concurrence(DensityMatrix.from_pure(dicke_state(2, 0))), 0.0)

	def test_eta(self):
		eta = majoranastates.ETA
		self.assertAlmostEqual(concurrence(rdm_full(eta, [1, 2])), 1.0 / 3.0)
		self.assertAlmostEqual(three_tangle(eta), 1.0 / 3.0)

	def test_ghz(self):
		self.assertAlmostEqual(concurrence(rdm_full(ghz_state(3), [1, 3])),
			0.0)
		self.assertAlmostEqual(three_tangle(ghz_state(3)), 1.0)

	def test_w(self):
		self.assertAlmostEqual(
			concurrence(rdm_full(dicke_state(3, 1), [1, 2])), 2.0 / 3.0)
		self.assertAlmostEqual(three_tangle(dicke_state(3, 1)), 0.0)

	def test_symmetric_basis_input(self):
		rho = rdm_symmetric(majoranastates.ETA, 2)
		self.assertAlmostEqual(concurrence(rho), 1.0 / 3.0)

	def test_plain_array_input(self):
		self.assertAlmostEqual(concurrence(np.eye(4) / 4.0), 0.0)

	def test_local_unitary_invariance(self):
		rng = np.random.default_rng(71)
		state = random_symmetric_state(3, rng)
		moved = apply_local(state, _random_unitaries(rng, 3))
		self.assertAlmostEqual(concurrence(rdm_full(state, [1, 2])),
			concurrence(rdm_full(moved, [1, 2])))
		self.assertAlmostEqual(three_tangle(state), three_tangle(moved))

	def test_local_unitary_invariance_sweep(self):
		rng = np.random.default_rng(127)
		for trial in range(50):
			n = 2 + trial % 4
			state = random_symmetric_state(n, rng)
			moved = apply_local(state, _random_unitaries(rng, n))
			self.assertLessEqual(abs(concurrence(rdm_full(state, [1, 2])) -
				concurrence(rdm_full(moved, [1, 2]))), 1e-8)
			state = random_symmetric_state(3, rng)
			moved = apply_local(state, _random_unitaries(rng, 3))
			self.assertLessEqual(
				abs(three_tangle(state) - three_tangle(moved)), 1e-8)

	def test_wrong_size(self):
		self.assertRaises(ValueError, concurrence, np.eye(2) / 2.0)
		self.assertRaises(ValueError, three_tangle, ghz_state(4))

class TestDnkState(unittest.TestCase):
	def test_matches_symmetrisation(self):
		state = dnk_state(5, 2, 0.6, 0.8)
		expected = symmetrize([(1, 0)] * 3 + [(0.6, 0.8)] * 2)
		self.assertLessEqual(distance(state, expected), 1e-12)

	def test_configuration(self):
		self.assertEqual(classify(dnk_state(5, 2, 0.6, 0.8)).label,
			'D_{3,2}')
		self.assertEqual(classify(dnk_state(4, 2, 0.3, 1j)).label,
			'D_{2,2}')

	def test_dicke_limit(self):
		self.assertLessEqual(
			distance(dnk_state(6, 2, 0.0, 1.0), dicke_state(6, 2)), 1e-12)

	def test_invalid(self):
		self.assertRaises(ValueError, dnk_state, 5, 3, 0.6, 0.8)
		self.assertRaises(ValueError, dnk_state, 5, 0, 0.6, 0.8)
		self.assertRaises(ValueError, dnk_state, 5, 2, 1.0, 0.0)

class TestGeneralizedDicke(unittest.TestCase):
	def test_order(self):
		self.assertEqual(generalized_dicke_order(3, 1), [4, 2, 1])
		self.assertEqual(generalized_dicke_order(3, 2), [6, 5, 3])
		self.assertEqual(generalized_dicke_order(4, 2), [12, 10, 6, 9, 5, 3])
		self.assertEqual(generalized_dicke_order(3, 0), [0])

	def test_equal_coefficients_are_symmetric(self):
		state = generalized_dicke_state(4, 2, [0.5, 1.0, 2.0],
			[[1], [1] * 4, [1] * 6])
		symmetric, residual = project_to_symmetric(state)
		self.assertLessEqual(residual, 1e-12)
		self.assertLessEqual(distance(expand_to_full(symmetric), state),
			1e-12)

	def test_amplitudes(self):
		state = generalized_dicke_state(3, 1, [1.0, 1.0], [[0], [1, 2, 0]])
		self.assertTrue(np.allclose(state.vector,
			np.array([0, 0, 2, 0, 1, 0, 0, 0]) / math.sqrt(5.0)))

	def test_lengths(self):
		self.assertRaises(ValueError, generalized_dicke_state, 3, 1,
			[1.0, 1.0], [[1], [1, 1]])
		self.assertRaises(ValueError, generalized_dicke_state, 3, 1,
			[1.0], [[1], [1, 1, 1]])

	def test_uniqueness_conditions(self):
		self.assertTrue(uniqueness_conditions(3, 1, [[1], [0, 1, 1]]))
		self.assertFalse(uniqueness_conditions(3, 1, [[1], [1, 1, 0]]))
		self.assertFalse(uniqueness_conditions(3, 1, [[1], [1, 0, 1]]))

class TestReconstruction(unittest.TestCase):
	def test_two_point_state(self):
		state = dnk_state(5, 2, 0.6, 0.8)
		rho_a, rho_b = _marginals(state, 5)
		found = reconstruct_from_two_marginals(rho_a, rho_b, seed=1)
		self.assertNotEqual(found, AMBIGUOUS)
		self.assertLessEqual(distance(found, state), 1e-5)

	def test_w_state(self):
		state = dicke_state(4, 1)
		rho_a, rho_b = _marginals(state, 4)
		found = reconstruct_from_two_marginals(rho_a, rho_b, seed=2)
		self.assertLessEqual(distance(found, state), 1e-5)

	def test_product_state(self):
		state = symmetrize([(0.6, 0.8j)] * 4)
		rho_a, rho_b = _marginals(state, 4)
		found = reconstruct_from_two_marginals(rho_a, rho_b, seed=3)
		self.assertLessEqual(distance(found, state), 1e-5)

	def test_generalized_dicke_state(self):
		a = [[1], [0.3, 0.5, 0.7, 0.4]]
		self.assertTrue(uniqueness_conditions(4, 1, a))
		state = generalized_dicke_state(4, 1, [0.6, 0.8], a)
		rho_a, rho_b = _marginals(state, 4)
		found = reconstruct_from_two_marginals(rho_a, rho_b, seed=10)
		self.assertLessEqual(distance(found, state), 1e-5)

	def test_two_point_sweep(self):
		rng = np.random.default_rng(131)
		cases = [(n, k) for n in range(4, 9) for k in range(1, n // 2 + 1)]
		for trial in range(200):
			n, k = cases[trial % len(cases)]
			d0, d1 = _random_complex(rng, 2)
			state = dnk_state(n, k, d0, d1)
			rho_a, rho_b = _marginals(state, n)
			found = reconstruct_from_two_marginals(rho_a, rho_b, restarts=8,
				seed=trial)
			self.assertNotEqual(found, AMBIGUOUS)
			self.assertGreaterEqual(_fidelity(found, state), 1.0 - 1e-8)

	def test_generalized_dicke_sweep(self):
		rng = np.random.default_rng(137)
		cases = [(n, k) for n in range(3, 7) for k in range(1, n // 2 + 1)]
		count = 0
		while count < 50:
			n, k = cases[count % len(cases)]
			weights = rng.uniform(0.5, 1.5, size=k + 1)
			a = [_random_complex(rng, math.comb(n, r)) for r in range(k + 1)]
			if not uniqueness_conditions(n, k, a):
				continue
			state = generalized_dicke_state(n, k, weights, a)
			rho_a, rho_b = _marginals(state, n)
			found = reconstruct_from_two_marginals(rho_a, rho_b, restarts=8,
				seed=count)
			self.assertNotEqual(found, AMBIGUOUS)
			self.assertGreaterEqual(_fidelity(found, state), 1.0 - 1e-8)
			count += 1

	def test_ghz_is_ambiguous(self):
		rho_a, rho_b = _marginals(ghz_state(4), 4)
		self.assertEqual(
			reconstruct_from_two_marginals(rho_a, rho_b, seed=4), AMBIGUOUS)

	def test_inconsistent(self):
		rho_a = rdm_full(ghz_state(3), [1, 2])
		rho_b = DensityMatrix(np.diag([1.0, 0.0, 0.0, 0.0]))
		self.assertRaises(NumericalError, reconstruct_from_two_marginals,
			rho_a, rho_b, seed=5)

	def test_rank_too_high(self):
		rho = DensityMatrix(np.eye(4) / 4.0)
		self.assertRaises(ValueError, reconstruct_from_two_marginals,
			rho, rho)

	def test_size_mismatch(self):
		self.assertRaises(ValueError, reconstruct_from_two_marginals,
			rdm_full(ghz_state(4), [1, 2, 3]), rdm_full(ghz_state(4), [1, 2]))

	def test_parallel_matches_serial(self):
		rho_a, rho_b = _marginals(dicke_state(4, 2), 4)
		serial = reconstruct_from_two_marginals(rho_a, rho_b, seed=6)
		threaded = reconstruct_from_two_marginals(rho_a, rho_b, seed=6,
			parallel=True)
		self.assertLessEqual(distance(serial, threaded), 1e-9)

class TestMarginalSearch(unittest.TestCase):
	def _pairs(self, state):
		return [(keep, rdm_full(state, keep))
			for keep in ([1, 2], [1, 3], [2, 3])]

	def test_eta_is_unique(self):
		eta = majoranastates.ETA
		targets = [(keep, rdm_full(eta, keep)) for keep in ([1, 2], [1, 3])]
		found = marginal_match_search(targets, 3, seed=7)
		self.assertEqual(len(found), 1)
		self.assertLessEqual(distance(found[0], eta), 1e-4)

	def test_ghz_has_many(self):
		ghz = ghz_state(3)
		targets = self._pairs(ghz)
		found = marginal_match_search(targets, 3, seed=8)
		self.assertGreater(len(found), 1)
		for state in found:
			for keep, target in targets:
				self.assertLessEqual(
					rdm_full(state, keep).distance(target), 1e-5)

	def test_two_point_state(self):
		state = dnk_state(4, 1, 0.6, 0.8)
		targets = [(keep, rdm_full(state, keep))
			for keep in ([1, 2, 3], [2, 3, 4])]
		found = marginal_match_search(targets, 4, seed=9)
		self.assertEqual(len(found), 1)
		self.assertLessEqual(distance(found[0], state), 1e-4)
		for keep, target in targets:
			self.assertLessEqual(
				rdm_full(found[0], keep).distance(target), 1e-5)

	def test_too_many_qubits(self):
		target = ([1], DensityMatrix(np.eye(2) / 2.0))
		self.assertRaises(ValueError, marginal_match_search, [target], 9)

	def test_mismatched_target(self):
		target = ([1, 2], DensityMatrix(np.eye(2) / 2.0))
		self.assertRaises(ValueError, marginal_match_search, [target], 3)
		self.assertRaises(ValueError, marginal_match_search, [], 3)
