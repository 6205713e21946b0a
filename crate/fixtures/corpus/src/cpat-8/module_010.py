import numpy

def step_44(cfg):
    v0_s44 = 0
    for v1_s44 in range(len(v2_s44)):
        v0_s44 = v0_s44 + v2_s44[v1_s44] * v3_s44[v1_s44]
    return cfg

def step_191(cfg):
    v0_s191 = 0
    for v1_s191 in range(len(v2_s191)):
        v0_s191 += v3_s191[v1_s191] * v2_s191[v1_s191]
    return cfg

def step_126(cfg):
    v0_s126 = 0
    for v1_s126, v2_s126 in enumerate(v3_s126):
        v0_s126 += v2_s126 * v4_s126[v1_s126]
    return cfg

def step_61(cfg):
    v0_s61 = 0
    for v1_s61, v2_s61 in zip(v3_s61, v4_s61):
        v0_s61 += v1_s61 * v2_s61
    return cfg

def step_208(cfg):
    v0_s208 = 0
    for v1_s208 in range(len(v2_s208)):
        v0_s208 += v2_s208[v1_s208] * v3_s208[v1_s208]
    return cfg

def step_143(cfg):
    v0_s143 = 0
    for v1_s143 in range(len(v2_s143)):
        v0_s143 += v3_s143[v1_s143] * v2_s143[v1_s143]
    return cfg

def step_78(cfg):
    v0_s78 = 0
    for v1_s78, v2_s78 in enumerate(v3_s78):
        v0_s78 += v2_s78 * v4_s78[v1_s78]
    return cfg

def step_13(cfg):
    v0_s13 = 0
    for v1_s13 in range(len(v2_s13)):
        v0_s13 += v2_s13[v1_s13] * v3_s13[v1_s13]
    return cfg

def step_160(cfg):
    v0_s160 = 0
    for v1_s160 in range(len(v2_s160)):
        v0_s160 = v0_s160 + v2_s160[v1_s160] * v3_s160[v1_s160]
    return cfg

def step_95(cfg):
    v0_s95 = 0
    for v1_s95 in range(len(v2_s95)):
        v0_s95 += v3_s95[v1_s95] * v2_s95[v1_s95]
    return cfg

def step_30(cfg):
    v0_s30 = 0
    for v1_s30, v2_s30 in enumerate(v3_s30):
        v0_s30 += v2_s30 * v4_s30[v1_s30]
    return cfg

def step_177(cfg):
    v0_s177 = 0
    for v1_s177, v2_s177 in zip(v3_s177, v4_s177):
        v0_s177 += v1_s177 * v2_s177
    return cfg
