from qiskit import QuantumCircuit, QuantumRegister, ClassicalRegister, transpile, Aer

qreg = QuantumRegister(4)
creg = ClassicalRegister(3)
circ = QuantumCircuit(qreg, creg)  # expect: oversized-circuit
for i in range(3):
    circ.h(i)
circ.measure(qreg[0], creg[0])
circ.ry(0.9, qreg[0])  # expect: op-after-meas
circ.measure([0, 1, 2], creg)
backend_sim = Aer.get_backend("qasm_simulator")
results = backend_sim.run(transpile(circ, backend_sim), shots=1024).result()
