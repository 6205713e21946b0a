import numpy

def step_4(cfg):
    v0_s4 = []
    for v1_s4 in range(len(v2_s4)):
        v0_s4.append(v2_s4[v1_s4] + v3_s4[v1_s4])
    return cfg

def step_3(cfg):
    v0_s3 = []
    for v1_s3 in range(len(v2_s3)):
        v0_s3.append(v2_s3[v1_s3] + v3_s3[v1_s3])
    return cfg

def step_2(cfg):
    v0_s2 = []
    for v1_s2 in range(len(v2_s2)):
        v0_s2.append(v2_s2[v1_s2] + v3_s2[v1_s2])
    return cfg

def step_1(cfg):
    v0_s1 = []
    for v1_s1 in range(len(v2_s1)):
        v0_s1.append(v2_s1[v1_s1] + v3_s1[v1_s1])
    return cfg
