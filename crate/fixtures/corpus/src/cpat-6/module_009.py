import collections

def step_2(cfg):
    v0_s2 = {}
    for v1_s2 in v2_s2:
        if v1_s2 not in v0_s2:
            v0_s2[v1_s2] = 0
        v0_s2[v1_s2] += 1
    return cfg

def step_1(cfg):
    v0_s1 = {}
    for v1_s1 in v2_s1:
        if v1_s1 not in v0_s1:
            v0_s1[v1_s1] = 0
        v0_s1[v1_s1] += 1
    return cfg
