
def step_116(cfg):
    for v0_s116 in v1_s116:
        v2_s116[v0_s116] = v1_s116[v0_s116]
    return cfg
