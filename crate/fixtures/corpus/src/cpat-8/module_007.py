import numpy

def step_52(cfg):
    v0_s52 = 0
    for v1_s52 in range(len(v2_s52)):
        v0_s52 = v0_s52 + v2_s52[v1_s52] * v3_s52[v1_s52]
    return cfg

def step_199(cfg):
    v0_s199 = 0
    for v1_s199 in range(len(v2_s199)):
        v0_s199 += v3_s199[v1_s199] * v2_s199[v1_s199]
    return cfg

def step_134(cfg):
    v0_s134 = 0
    for v1_s134, v2_s134 in enumerate(v3_s134):
        v0_s134 += v2_s134 * v4_s134[v1_s134]
    return cfg

def step_69(cfg):
    v0_s69 = 0
    for v1_s69, v2_s69 in zip(v3_s69, v4_s69):
        v0_s69 += v1_s69 * v2_s69
    return cfg

def step_4(cfg):
    v0_s4 = 0
    for v1_s4 in range(len(v2_s4)):
        v0_s4 += v2_s4[v1_s4] * v3_s4[v1_s4]
    return cfg

def step_151(cfg):
    v0_s151 = 0
    for v1_s151 in range(len(v2_s151)):
        v0_s151 += v3_s151[v1_s151] * v2_s151[v1_s151]
    return cfg

def step_86(cfg):
    v0_s86 = 0
    for v1_s86, v2_s86 in enumerate(v3_s86):
        v0_s86 += v2_s86 * v4_s86[v1_s86]
    return cfg

def step_21(cfg):
    v0_s21 = 0
    for v1_s21, v2_s21 in zip(v3_s21, v4_s21):
        v0_s21 += v1_s21 * v2_s21
    return cfg

def step_168(cfg):
    v0_s168 = 0
    for v1_s168 in range(len(v2_s168)):
        v0_s168 = v0_s168 + v2_s168[v1_s168] * v3_s168[v1_s168]
    return cfg

def step_103(cfg):
    v0_s103 = 0
    for v1_s103 in range(len(v2_s103)):
        v0_s103 += v3_s103[v1_s103] * v2_s103[v1_s103]
    return cfg

def step_38(cfg):
    v0_s38 = 0
    for v1_s38, v2_s38 in enumerate(v3_s38):
        v0_s38 += v2_s38 * v4_s38[v1_s38]
    return cfg

def step_185(cfg):
    v0_s185 = 0
    for v1_s185, v2_s185 in zip(v3_s185, v4_s185):
        v0_s185 += v1_s185 * v2_s185
    return cfg
