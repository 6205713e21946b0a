
def step_101(cfg):
    v0_s101 = []
    for v1_s101 in v2_s101:
        if v1_s101 in v3_s101:
            if v1_s101 not in v0_s101:
                v0_s101.append(v1_s101)
    return cfg
