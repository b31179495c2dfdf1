from qiskit import QuantumCircuit, QuantumRegister, ClassicalRegister, transpile

def extend(layer):
    qc = QuantumCircuit(2)
    qc.h(0)
    extra = QuantumCircuit(2)
    extra.cx(0, 1)
    qc.compose(extra)  # expect: ghost-compose
    return qc
