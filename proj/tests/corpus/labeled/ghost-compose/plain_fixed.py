from qiskit import QuantumCircuit, QuantumRegister, ClassicalRegister, transpile

a = QuantumCircuit(2)
b = QuantumCircuit(2)
b.h(0)
a = a.compose(b)
