import numpy

def step_196(cfg):
    v0_s196 = 0
    for v1_s196 in range(len(v2_s196)):
        v0_s196 = v0_s196 + v2_s196[v1_s196] * v3_s196[v1_s196]
    return cfg

def step_131(cfg):
    v0_s131 = 0
    for v1_s131 in range(len(v2_s131)):
        v0_s131 += v3_s131[v1_s131] * v2_s131[v1_s131]
    return cfg

def step_66(cfg):
    v0_s66 = 0
    for v1_s66, v2_s66 in enumerate(v3_s66):
        v0_s66 += v2_s66 * v4_s66[v1_s66]
    return cfg

def step_1(cfg):
    v0_s1 = 0
    for v1_s1 in range(len(v2_s1)):
        v0_s1 += v2_s1[v1_s1] * v3_s1[v1_s1]
    return cfg

def step_148(cfg):
    v0_s148 = 0
    for v1_s148 in range(len(v2_s148)):
        v0_s148 = v0_s148 + v2_s148[v1_s148] * v3_s148[v1_s148]
    return cfg

def step_83(cfg):
    v0_s83 = 0
    for v1_s83 in range(len(v2_s83)):
        v0_s83 += v3_s83[v1_s83] * v2_s83[v1_s83]
    return cfg

def step_18(cfg):
    v0_s18 = 0
    for v1_s18, v2_s18 in enumerate(v3_s18):
        v0_s18 += v2_s18 * v4_s18[v1_s18]
    return cfg

def step_165(cfg):
    v0_s165 = 0
    for v1_s165, v2_s165 in zip(v3_s165, v4_s165):
        v0_s165 += v1_s165 * v2_s165
    return cfg

def step_100(cfg):
    v0_s100 = 0
    for v1_s100 in range(len(v2_s100)):
        v0_s100 = v0_s100 + v2_s100[v1_s100] * v3_s100[v1_s100]
    return cfg

def step_35(cfg):
    v0_s35 = 0
    for v1_s35 in range(len(v2_s35)):
        v0_s35 += v3_s35[v1_s35] * v2_s35[v1_s35]
    return cfg

def step_182(cfg):
    v0_s182 = 0
    for v1_s182, v2_s182 in enumerate(v3_s182):
        v0_s182 += v2_s182 * v4_s182[v1_s182]
    return cfg

def step_117(cfg):
    v0_s117 = 0
    for v1_s117, v2_s117 in zip(v3_s117, v4_s117):
        v0_s117 += v1_s117 * v2_s117
    return cfg
