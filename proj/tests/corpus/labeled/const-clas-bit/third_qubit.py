from qiskit import QuantumCircuit, QuantumRegister, ClassicalRegister, transpile

qc = QuantumCircuit(3, 3)
qc.cx(0, 1)
qc.measure(2, 2)  # expect: const-clas-bit
