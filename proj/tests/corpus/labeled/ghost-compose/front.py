from qiskit import QuantumCircuit, QuantumRegister, ClassicalRegister, transpile

prep = QuantumCircuit(1)
prep.h(0)
body = QuantumCircuit(1)
body.x(0)
body.compose(prep, front=True)  # expect: ghost-compose
