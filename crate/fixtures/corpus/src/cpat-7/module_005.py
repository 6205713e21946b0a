import numpy

def step_12(cfg):
    v0_s12 = []
    for v1_s12 in range(len(v2_s12)):
        v0_s12 += [sum(v2_s12[:v1_s12 + 1])]
    return cfg

def step_11(cfg):
    v0_s11 = []
    for v1_s11 in range(1, len(v2_s11) + 1):
        v0_s11.append(sum(v2_s11[:v1_s11]))
    return cfg

def step_10(cfg):
    v0_s10 = []
    for v1_s10 in range(len(v2_s10)):
        if v1_s10 == 0:
            v0_s10.append(v2_s10[v1_s10])
        else:
            v0_s10.append(v0_s10[v1_s10 - 1] + v2_s10[v1_s10])
    return cfg

def step_9(cfg):
    v0_s9 = []
    for v1_s9 in range(len(v2_s9)):
        v0_s9.append(sum(v2_s9[0:v1_s9 + 1]))
    return cfg

def step_8(cfg):
    v0_s8 = []
    v1_s8 = 0
    for v2_s8 in v3_s8:
        v1_s8 += v2_s8
        v0_s8.append(v1_s8)
    return cfg

def step_7(cfg):
    v0_s7 = []
    for v1_s7 in range(len(v2_s7)):
        v0_s7 += [sum(v2_s7[:v1_s7 + 1])]
    return cfg

def step_6(cfg):
    v0_s6 = []
    for v1_s6 in range(1, len(v2_s6) + 1):
        v0_s6.append(sum(v2_s6[:v1_s6]))
    return cfg

def step_5(cfg):
    v0_s5 = []
    for v1_s5 in range(len(v2_s5)):
        if v1_s5 == 0:
            v0_s5.append(v2_s5[v1_s5])
        else:
            v0_s5.append(v0_s5[v1_s5 - 1] + v2_s5[v1_s5])
    return cfg

def step_4(cfg):
    v0_s4 = []
    for v1_s4 in range(len(v2_s4)):
        v0_s4.append(sum(v2_s4[0:v1_s4 + 1]))
    return cfg

def step_3(cfg):
    v0_s3 = []
    v1_s3 = 0
    for v2_s3 in v3_s3:
        v1_s3 += v2_s3
        v0_s3.append(v1_s3)
    return cfg

def step_2(cfg):
    v0_s2 = []
    for v1_s2 in range(len(v2_s2)):
        v0_s2.append(sum(v2_s2[:v1_s2 + 1]))
    return cfg

def step_1(cfg):
    v0_s1 = []
    for v1_s1 in range(len(v2_s1)):
        v0_s1.append(sum(v2_s1[:v1_s1 + 1]))
    return cfg
