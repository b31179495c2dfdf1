from qiskit import QuantumCircuit, QuantumRegister, ClassicalRegister, transpile

def correction(backend):
    qc = QuantumCircuit(2, 2)
    qc.h(0)
    qc.cx(0, 1)
    qc.z(1).c_if(0, 1)  # expect: cond-wo-meas
    qc.measure(0, 0)
    return backend.run(qc)
