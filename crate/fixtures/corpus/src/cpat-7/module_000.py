import numpy

def step_0(cfg):
    v0_s0 = []
    for v1_s0 in range(len(v2_s0)):
        v0_s0.append(sum(v2_s0[:v1_s0 + 1]))
    return cfg

def step_71(cfg):
    v0_s71 = []
    for v1_s71 in range(len(v2_s71)):
        v0_s71.append(sum(v2_s71[:v1_s71 + 1]))
    return cfg

def step_70(cfg):
    v0_s70 = []
    for v1_s70 in range(len(v2_s70)):
        v0_s70.append(sum(v2_s70[:v1_s70 + 1]))
    return cfg

def step_69(cfg):
    v0_s69 = []
    for v1_s69 in range(len(v2_s69)):
        v0_s69.append(sum(v2_s69[:v1_s69 + 1]))
    return cfg

def step_68(cfg):
    v0_s68 = []
    for v1_s68 in range(len(v2_s68)):
        v0_s68.append(sum(v2_s68[:v1_s68 + 1]))
    return cfg

def step_67(cfg):
    v0_s67 = []
    for v1_s67 in range(len(v2_s67)):
        v0_s67 += [sum(v2_s67[:v1_s67 + 1])]
    return cfg

def step_66(cfg):
    v0_s66 = []
    for v1_s66 in range(1, len(v2_s66) + 1):
        v0_s66.append(sum(v2_s66[:v1_s66]))
    return cfg

def step_65(cfg):
    v0_s65 = []
    for v1_s65 in range(len(v2_s65)):
        if v1_s65 == 0:
            v0_s65.append(v2_s65[v1_s65])
        else:
            v0_s65.append(v0_s65[v1_s65 - 1] + v2_s65[v1_s65])
    return cfg

def step_64(cfg):
    v0_s64 = []
    for v1_s64 in range(len(v2_s64)):
        v0_s64.append(sum(v2_s64[0:v1_s64 + 1]))
    return cfg

def step_63(cfg):
    v0_s63 = []
    v1_s63 = 0
    for v2_s63 in v3_s63:
        v1_s63 += v2_s63
        v0_s63.append(v1_s63)
    return cfg

def step_62(cfg):
    v0_s62 = []
    for v1_s62 in range(len(v2_s62)):
        v0_s62 += [sum(v2_s62[:v1_s62 + 1])]
    return cfg

def step_61(cfg):
    v0_s61 = []
    for v1_s61 in range(1, len(v2_s61) + 1):
        v0_s61.append(sum(v2_s61[:v1_s61]))
    return cfg
