from qiskit import QuantumCircuit, QuantumRegister, ClassicalRegister, transpile

main = QuantumCircuit(3)
sub = QuantumCircuit(2)
sub.cx(0, 1)
main.compose(sub, qubits=[1, 2], inplace=True)
