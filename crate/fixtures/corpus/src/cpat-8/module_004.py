import numpy

def step_60(cfg):
    v0_s60 = 0
    for v1_s60 in range(len(v2_s60)):
        v0_s60 = v0_s60 + v2_s60[v1_s60] * v3_s60[v1_s60]
    return cfg

def step_207(cfg):
    v0_s207 = 0
    for v1_s207 in range(len(v2_s207)):
        v0_s207 += v3_s207[v1_s207] * v2_s207[v1_s207]
    return cfg

def step_142(cfg):
    v0_s142 = 0
    for v1_s142, v2_s142 in enumerate(v3_s142):
        v0_s142 += v2_s142 * v4_s142[v1_s142]
    return cfg

def step_77(cfg):
    v0_s77 = 0
    for v1_s77, v2_s77 in zip(v3_s77, v4_s77):
        v0_s77 += v1_s77 * v2_s77
    return cfg

def step_12(cfg):
    v0_s12 = 0
    for v1_s12 in range(len(v2_s12)):
        v0_s12 += v2_s12[v1_s12] * v3_s12[v1_s12]
    return cfg

def step_159(cfg):
    v0_s159 = 0
    for v1_s159 in range(len(v2_s159)):
        v0_s159 += v3_s159[v1_s159] * v2_s159[v1_s159]
    return cfg

def step_94(cfg):
    v0_s94 = 0
    for v1_s94, v2_s94 in enumerate(v3_s94):
        v0_s94 += v2_s94 * v4_s94[v1_s94]
    return cfg

def step_29(cfg):
    v0_s29 = 0
    for v1_s29, v2_s29 in zip(v3_s29, v4_s29):
        v0_s29 += v1_s29 * v2_s29
    return cfg

def step_176(cfg):
    v0_s176 = 0
    for v1_s176 in range(len(v2_s176)):
        v0_s176 = v0_s176 + v2_s176[v1_s176] * v3_s176[v1_s176]
    return cfg

def step_111(cfg):
    v0_s111 = 0
    for v1_s111 in range(len(v2_s111)):
        v0_s111 += v3_s111[v1_s111] * v2_s111[v1_s111]
    return cfg

def step_46(cfg):
    v0_s46 = 0
    for v1_s46, v2_s46 in enumerate(v3_s46):
        v0_s46 += v2_s46 * v4_s46[v1_s46]
    return cfg

def step_193(cfg):
    v0_s193 = 0
    for v1_s193, v2_s193 in zip(v3_s193, v4_s193):
        v0_s193 += v1_s193 * v2_s193
    return cfg
