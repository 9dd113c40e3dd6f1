# -*- coding: utf-8 -*-
import math
import unittest

import numpy as np

from majoranastates.errors import NumericalError
from majoranastates.state import (
	Spinor, SymmetricState, FullState, DensityMatrix, SYMMETRIC,
	dicke_state, ghz_state, expand_to_full, project_to_symmetric, overlap,
	distance, symmetrize, apply_local, random_symmetric_state,
	random_full_state)

def _near_enough(values, target, tolerance=1e-12):
	return np.allclose(np.asarray(values), np.asarray(target),
		atol=tolerance, rtol=0.0)

class TestSpinor(unittest.TestCase):
	def test_canonical_phase(self):
		spinor = Spinor(1j, 0)
		self.assertEqual(spinor, Spinor(1, 0))
		self.assertEqual(spinor.a, 1.0)

	def test_normalised(self):
		spinor = Spinor(3, 4j)
		self.assertAlmostEqual(abs(spinor.a), 0.6)
		self.assertAlmostEqual(abs(spinor.b), 0.8)

	def test_from_angles(self):
		self.assertTrue(Spinor.from_angles(0, 0).is_approximately((1, 0)))
		self.assertTrue(
			Spinor.from_angles(0, math.pi).is_approximately((0, 1)))
		self.assertTrue(Spinor.from_angles(math.pi / 2, math.pi / 2)
			.is_approximately((math.sqrt(0.5), 1j * math.sqrt(0.5))))

	def test_angles(self):
		alpha, beta = Spinor.from_angles(1.2, 0.7).angles
		self.assertAlmostEqual(alpha, 1.2)
		self.assertAlmostEqual(beta, 0.7)
		self.assertEqual(Spinor(0, 1).angles, (0.0, math.pi))

	def test_zero_spinor(self):
		self.assertRaises(NumericalError, Spinor, 0, 0)

class TestDickeState(unittest.TestCase):
	def test_coefficients(self):
		self.assertEqual(dicke_state(3, 2).coefficients, (0, 0, 1, 0))

	def test_three_qubits(self):
		full = expand_to_full(dicke_state(3, 2))
		third = 1.0 / math.sqrt(3)
		self.assertTrue(_near_enough(full.vector,
			[0, 0, 0, third, 0, third, third, 0]))

	def test_single_qubit(self):
		self.assertTrue(_near_enough(
			expand_to_full(dicke_state(1, 0)).vector, [1, 0]))

	def test_four_qubits(self):
		vector = expand_to_full(dicke_state(4, 2)).vector
		weights = [bin(i).count('1') for i in range(16)]
		for index, amplitude in enumerate(vector):
			expected = 1 / math.sqrt(6) if weights[index] == 2 else 0.0
			self.assertAlmostEqual(abs(amplitude), expected)

	def test_orthonormal(self):
		for l in range(5):
			for m in range(5):
				self.assertEqual(
					overlap(dicke_state(4, l), dicke_state(4, m)),
					1.0 if l == m else 0.0)

	def test_out_of_range(self):
		self.assertRaises(ValueError, dicke_state, 3, 4)
		self.assertRaises(ValueError, dicke_state, 3, -1)
		self.assertRaises(ValueError, dicke_state, 0, 0)

class TestGhzState(unittest.TestCase):
	def test_coefficients(self):
		half = math.sqrt(0.5)
		self.assertTrue(_near_enough(ghz_state(3).vector, [half, 0, 0, half]))

	def test_expansion(self):
		half = math.sqrt(0.5)
		self.assertTrue(_near_enough(expand_to_full(ghz_state(3)).vector,
			[half, 0, 0, 0, 0, 0, 0, half]))
		self.assertTrue(_near_enough(expand_to_full(ghz_state(2)).vector,
			[half, 0, 0, half]))

	def test_overlap_with_product(self):
		self.assertAlmostEqual(
			abs(overlap(ghz_state(4), dicke_state(4, 0))), math.sqrt(0.5))

	def test_too_small(self):
		self.assertRaises(ValueError, ghz_state, 1)

class TestFullState(unittest.TestCase):
	def test_power_of_two(self):
		self.assertRaises(ValueError, FullState, [1, 0, 0])

	def test_too_many_qubits(self):
		self.assertRaises(ValueError, FullState, np.ones(2 ** 13))

	def test_tensor(self):
		state = FullState([0, 0, 0, 1])
		self.assertEqual(state.n, 2)
		self.assertEqual(state.tensor[1, 1], 1)

class TestProjection(unittest.TestCase):
	def test_roundtrip(self):
		rng = np.random.default_rng(11)
		for n in range(1, 13):
			state = random_symmetric_state(n, rng)
			back, residual = project_to_symmetric(expand_to_full(state))
			self.assertLessEqual(residual, 1e-10)
			self.assertLessEqual(distance(back, state), 1e-10)

	def test_single_excitation(self):
		state, residual = project_to_symmetric(FullState([0, 1, 0, 0]))
		self.assertTrue(_near_enough(state.vector, [0, 1, 0]))
		self.assertAlmostEqual(residual, math.sqrt(0.5))

	def test_singlet(self):
		singlet = FullState([0, 1, -1, 0])
		self.assertRaises(NumericalError, project_to_symmetric, singlet)

class TestOverlap(unittest.TestCase):
	def test_self(self):
		state = random_symmetric_state(5, np.random.default_rng(3))
		self.assertAlmostEqual(abs(overlap(state, state)), 1.0)

	def test_examples(self):
		self.assertAlmostEqual(
			abs(overlap(dicke_state(3, 0), ghz_state(3))), math.sqrt(0.5))
		self.assertEqual(overlap(dicke_state(3, 1), dicke_state(3, 2)), 0)

	def test_mixed_representations(self):
		state = random_symmetric_state(4, np.random.default_rng(5))
		other = random_symmetric_state(4, np.random.default_rng(6))
		self.assertAlmostEqual(overlap(state, expand_to_full(other)),
			overlap(state, other))

	def test_phase_invariance(self):
		rng = np.random.default_rng(8)
		x = random_full_state(3, rng)
		y = random_full_state(3, rng)
		rotated = FullState(np.exp(0.7j) * y.vector)
		self.assertAlmostEqual(abs(overlap(x, y)), abs(overlap(x, rotated)))

	def test_mismatch(self):
		self.assertRaises(ValueError, overlap, ghz_state(3), ghz_state(4))

class TestSymmetrize(unittest.TestCase):
	def test_one_up_one_down(self):
		state = symmetrize([(1, 0), (0, 1)])
		half = math.sqrt(0.5)
		self.assertTrue(_near_enough(expand_to_full(state).vector,
			[0, half, half, 0]))

	def test_product(self):
		spinor = Spinor(0.6, 0.8j)
		state = symmetrize([spinor] * 4)
		product = np.kron(np.kron(spinor.vector, spinor.vector),
			np.kron(spinor.vector, spinor.vector))
		self.assertLessEqual(distance(state, FullState(product)), 1e-12)

	def test_worked_example(self):
		half = math.sqrt(0.5)
		for sign in (1, -1):
			state = symmetrize([(half, sign * half), (1, 0), (0, 1)])
			expected = np.zeros(8)
			expected[[1, 2, 4]] = 1.0
			expected[[3, 5, 6]] = sign
			self.assertLessEqual(
				distance(state, FullState(expected)), 1e-12)

	def test_order_independent(self):
		rng = np.random.default_rng(21)
		spinors = [Spinor(*(rng.normal(size=2) + 1j * rng.normal(size=2)))
			for _ in range(6)]
		state = symmetrize(spinors)
		for _ in range(5):
			shuffled = [spinors[i] for i in rng.permutation(6)]
			self.assertLessEqual(distance(symmetrize(shuffled), state), 1e-10)

	def test_permutation_method(self):
		rng = np.random.default_rng(4)
		for n in range(1, 7):
			spinors = [rng.normal(size=2) + 1j * rng.normal(size=2)
				for _ in range(n)]
			self.assertLessEqual(distance(
				symmetrize(spinors),
				symmetrize(spinors, method='permutation')), 1e-9)

	def test_no_spinors(self):
		self.assertRaises(ValueError, symmetrize, [])
		self.assertRaises(ValueError, symmetrize, [(1, 0)], method='magic')

class TestApplyLocal(unittest.TestCase):
	def test_identity(self):
		state = random_symmetric_state(4, np.random.default_rng(1))
		self.assertLessEqual(distance(apply_local(state, np.eye(2)), state),
			1e-12)

	def test_flip(self):
		flipped = apply_local(dicke_state(3, 1), [[0, 1], [1, 0]])
		self.assertLessEqual(distance(flipped, dicke_state(3, 2)), 1e-12)

	def test_one_qubit(self):
		flip, identity = np.array([[0, 1], [1, 0]]), np.eye(2)
		result = apply_local(FullState([1, 0, 0, 0]), [flip, identity])
		self.assertTrue(_near_enough(result.vector, [0, 0, 1, 0]))

	def test_wrong_count(self):
		self.assertRaises(ValueError, apply_local, ghz_state(3),
			[np.eye(2)] * 2)

class TestDensityMatrix(unittest.TestCase):
	def test_pure(self):
		rho = DensityMatrix.from_pure(ghz_state(3))
		self.assertEqual(rho.basis, SYMMETRIC)
		self.assertEqual(rho.k, 3)
		self.assertEqual(rho.rank(), 1)

	def test_to_computational(self):
		state = random_symmetric_state(3, np.random.default_rng(2))
		rho = DensityMatrix.from_pure(state)
		full = DensityMatrix.from_pure(expand_to_full(state))
		self.assertLessEqual(rho.distance(full), 1e-12)
		self.assertTrue(rho.to_computational().is_approximately(full))

	def test_invalid(self):
		self.assertRaises(ValueError, DensityMatrix, [[1, 1], [0, 0]])
		self.assertRaises(ValueError, DensityMatrix, np.eye(2))
		self.assertRaises(ValueError, DensityMatrix, [[1.5, 0], [0, -0.5]])
		self.assertRaises(ValueError, DensityMatrix, np.eye(3) / 3)
		self.assertRaises(ValueError, DensityMatrix, [[1]], SYMMETRIC)

	def test_read_only(self):
		rho = DensityMatrix(np.eye(2) / 2)
		with self.assertRaises(ValueError):
			rho.matrix[0, 0] = 1.0
