# two parallel edges
initial r0
r0 b r1
r0 c r1
