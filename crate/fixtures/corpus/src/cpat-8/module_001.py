import numpy

def step_68(cfg):
    v0_s68 = 0
    for v1_s68 in range(len(v2_s68)):
        v0_s68 = v0_s68 + v2_s68[v1_s68] * v3_s68[v1_s68]
    return cfg

def step_3(cfg):
    v0_s3 = 0
    for v1_s3 in range(len(v2_s3)):
        v0_s3 += v2_s3[v1_s3] * v3_s3[v1_s3]
    return cfg

def step_150(cfg):
    v0_s150 = 0
    for v1_s150, v2_s150 in enumerate(v3_s150):
        v0_s150 += v2_s150 * v4_s150[v1_s150]
    return cfg

def step_85(cfg):
    v0_s85 = 0
    for v1_s85, v2_s85 in zip(v3_s85, v4_s85):
        v0_s85 += v1_s85 * v2_s85
    return cfg

def step_20(cfg):
    v0_s20 = 0
    for v1_s20 in range(len(v2_s20)):
        v0_s20 = v0_s20 + v2_s20[v1_s20] * v3_s20[v1_s20]
    return cfg

def step_167(cfg):
    v0_s167 = 0
    for v1_s167 in range(len(v2_s167)):
        v0_s167 += v3_s167[v1_s167] * v2_s167[v1_s167]
    return cfg

def step_102(cfg):
    v0_s102 = 0
    for v1_s102, v2_s102 in enumerate(v3_s102):
        v0_s102 += v2_s102 * v4_s102[v1_s102]
    return cfg

def step_37(cfg):
    v0_s37 = 0
    for v1_s37, v2_s37 in zip(v3_s37, v4_s37):
        v0_s37 += v1_s37 * v2_s37
    return cfg

def step_184(cfg):
    v0_s184 = 0
    for v1_s184 in range(len(v2_s184)):
        v0_s184 = v0_s184 + v2_s184[v1_s184] * v3_s184[v1_s184]
    return cfg

def step_119(cfg):
    v0_s119 = 0
    for v1_s119 in range(len(v2_s119)):
        v0_s119 += v3_s119[v1_s119] * v2_s119[v1_s119]
    return cfg

def step_54(cfg):
    v0_s54 = 0
    for v1_s54, v2_s54 in enumerate(v3_s54):
        v0_s54 += v2_s54 * v4_s54[v1_s54]
    return cfg

def step_201(cfg):
    v0_s201 = 0
    for v1_s201, v2_s201 in zip(v3_s201, v4_s201):
        v0_s201 += v1_s201 * v2_s201
    return cfg
