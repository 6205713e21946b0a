import numpy

def step_184(cfg):
    v0_s184 = 0
    for v1_s184 in v2_s184:
        v0_s184 = v0_s184 + v1_s184
    return cfg

def step_63(cfg):
    v0_s63 = 0
    for v1_s63 in range(len(v2_s63)):
        v0_s63 = v0_s63 + v2_s63[v1_s63]
    return cfg

def step_142(cfg):
    v0_s142 = 0
    for v1_s142 in range(len(v2_s142)):
        v0_s142 += v2_s142[v1_s142]
    return cfg

def step_21(cfg):
    v0_s21 = 0
    for v1_s21 in v2_s21:
        if v1_s21 != 0:
            v0_s21 += v1_s21
    return cfg

def step_100(cfg):
    v0_s100 = 0
    for v1_s100 in v2_s100:
        v0_s100 += v1_s100
    return cfg

def step_179(cfg):
    v0_s179 = 0
    for v1_s179 in v2_s179:
        v0_s179 = v0_s179 + v1_s179
    return cfg

def step_58(cfg):
    v0_s58 = 0
    for v1_s58 in range(len(v2_s58)):
        v0_s58 = v0_s58 + v2_s58[v1_s58]
    return cfg

def step_137(cfg):
    v0_s137 = 0
    for v1_s137 in range(len(v2_s137)):
        v0_s137 += v2_s137[v1_s137]
    return cfg

def step_16(cfg):
    v0_s16 = 0
    for v1_s16 in v2_s16:
        v0_s16 = v1_s16 + v0_s16
    return cfg

def step_95(cfg):
    v0_s95 = 0
    for v1_s95 in v2_s95:
        v0_s95 += v1_s95
    return cfg

def step_174(cfg):
    v0_s174 = 0
    for v1_s174 in v2_s174:
        v0_s174 = v0_s174 + v1_s174
    return cfg

def step_53(cfg):
    v0_s53 = 0
    for v1_s53 in range(len(v2_s53)):
        v0_s53 = v0_s53 + v2_s53[v1_s53]
    return cfg
