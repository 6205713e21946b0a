
def step_167(cfg):
    v0_s167 = []
    for v1_s167 in range(len(v2_s167)):
        if v3_s167(v2_s167[v1_s167]):
            v0_s167 += [v2_s167[v1_s167]]
    return cfg

def step_398(cfg):
    v0_s398 = []
    for v1_s398 in range(len(v2_s398)):
        if v3_s398(v2_s398[v1_s398]):
            v0_s398 += [v2_s398[v1_s398]]
    return cfg

def step_629(cfg):
    v0_s629 = []
    for v1_s629 in range(len(v2_s629)):
        if v3_s629(v2_s629[v1_s629]):
            v0_s629 += [v2_s629[v1_s629]]
    return cfg

def step_860(cfg):
    v0_s860 = []
    for v1_s860 in range(len(v2_s860)):
        if v3_s860(v2_s860[v1_s860]):
            v0_s860 += [v2_s860[v1_s860]]
    return cfg

def step_180(cfg):
    v0_s180 = []
    for v1_s180 in range(len(v2_s180)):
        if v3_s180(v2_s180[v1_s180]):
            v0_s180 = v0_s180 + [v2_s180[v1_s180]]
    return cfg

def step_411(cfg):
    v0_s411 = []
    for v1_s411 in range(len(v2_s411)):
        if v3_s411(v2_s411[v1_s411]):
            v0_s411 = v0_s411 + [v2_s411[v1_s411]]
    return cfg

def step_642(cfg):
    v0_s642 = []
    for v1_s642 in range(len(v2_s642)):
        if v3_s642(v2_s642[v1_s642]):
            v0_s642 = v0_s642 + [v2_s642[v1_s642]]
    return cfg

def step_873(cfg):
    v0_s873 = []
    for v1_s873 in range(len(v2_s873)):
        if v3_s873(v2_s873[v1_s873]):
            v0_s873 = v0_s873 + [v2_s873[v1_s873]]
    return cfg

def step_193(cfg):
    v0_s193 = []
    for v1_s193 in range(len(v2_s193)):
        v3_s193 = v2_s193[v1_s193]
        if v4_s193(v3_s193):
            v0_s193.append(v3_s193)
    return cfg

def step_424(cfg):
    v0_s424 = []
    for v1_s424 in range(len(v2_s424)):
        v3_s424 = v2_s424[v1_s424]
        if v4_s424(v3_s424):
            v0_s424.append(v3_s424)
    return cfg

def step_655(cfg):
    v0_s655 = []
    for v1_s655 in range(len(v2_s655)):
        v3_s655 = v2_s655[v1_s655]
        if v4_s655(v3_s655):
            v0_s655.append(v3_s655)
    return cfg

def step_886(cfg):
    v0_s886 = []
    for v1_s886 in range(len(v2_s886)):
        v3_s886 = v2_s886[v1_s886]
        if v4_s886(v3_s886):
            v0_s886.append(v3_s886)
    return cfg
