import numpy

def step_80(cfg):
    v0_s80 = 0
    for v1_s80 in v2_s80:
        v0_s80 += v1_s80
    return cfg

def step_159(cfg):
    v0_s159 = 0
    for v1_s159 in v2_s159:
        v0_s159 = v0_s159 + v1_s159
    return cfg

def step_38(cfg):
    v0_s38 = 0
    for v1_s38 in range(len(v2_s38)):
        v0_s38 = v0_s38 + v2_s38[v1_s38]
    return cfg

def step_117(cfg):
    v0_s117 = 0
    for v1_s117 in range(len(v2_s117)):
        v0_s117 += v2_s117[v1_s117]
    return cfg

def step_196(cfg):
    v0_s196 = 0
    for v1_s196 in v2_s196:
        v0_s196 = v1_s196 + v0_s196
    return cfg

def step_75(cfg):
    v0_s75 = 0
    for v1_s75 in v2_s75:
        v0_s75 += v1_s75
    return cfg

def step_154(cfg):
    v0_s154 = 0
    for v1_s154 in v2_s154:
        v0_s154 = v0_s154 + v1_s154
    return cfg

def step_33(cfg):
    v0_s33 = 0
    for v1_s33 in range(len(v2_s33)):
        v0_s33 = v0_s33 + v2_s33[v1_s33]
    return cfg

def step_112(cfg):
    v0_s112 = 0
    for v1_s112 in range(len(v2_s112)):
        v0_s112 += v2_s112[v1_s112]
    return cfg

def step_191(cfg):
    v0_s191 = 0
    for v1_s191 in v2_s191:
        if v1_s191 != 0:
            v0_s191 += v1_s191
    return cfg

def step_70(cfg):
    v0_s70 = 0
    for v1_s70 in v2_s70:
        v0_s70 += v1_s70
    return cfg

def step_149(cfg):
    v0_s149 = 0
    for v1_s149 in v2_s149:
        v0_s149 = v0_s149 + v1_s149
    return cfg
